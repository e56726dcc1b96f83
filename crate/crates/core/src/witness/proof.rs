use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rewrite::{apply_redex, find_redexes, redex_blocks, Redex};
use crate::term::notation::{parse_term, print_term};
use crate::term::{parse_monomial, Monomial, Term};
use crate::witness::identity::{check_fresh, transform_term, OuterFactor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofStep {
    pub redex: Redex,
    pub result: Monomial,
}

/// A chain of single interchanges from `start` to `end`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Proof {
    pub start: Monomial,
    pub steps: Vec<ProofStep>,
    pub end: Monomial,
}

/// Why a proof does not check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofFailure {
    /// 1-based step number; `None` when only the final monomial disagrees.
    pub step: Option<usize>,
    pub reason: String,
}

impl std::fmt::Display for ProofFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.step {
            Some(s) => write!(f, "step {s}: {}", self.reason),
            None => write!(f, "end: {}", self.reason),
        }
    }
}

/// Replays every step and compares each claimed result.
pub fn verify_proof(p: &Proof) -> std::result::Result<(), ProofFailure> {
    let mut here = p.start.clone();
    for (i, step) in p.steps.iter().enumerate() {
        let fail = |reason: String| ProofFailure { step: Some(i + 1), reason };
        let next = apply_redex(&here, &step.redex).map_err(|e| fail(e.to_string()))?;
        if next != step.result {
            return Err(fail(format!("rewriting gives {next}, the proof claims {}", step.result)));
        }
        here = next;
    }
    if here != p.end {
        return Err(ProofFailure { step: None, reason: format!("reached {here}, the proof claims {}", p.end) });
    }
    Ok(())
}

impl Proof {
    /// Applies redexes in turn from `start`.
    pub fn from_redexes(start: Monomial, redexes: impl IntoIterator<Item = Redex>) -> Result<Proof> {
        let mut here = start.clone();
        let mut steps = Vec::new();
        for redex in redexes {
            here = apply_redex(&here, &redex)?;
            steps.push(ProofStep { redex, result: here.clone() });
        }
        Ok(Proof { start, steps, end: here })
    }

    pub fn degree(&self) -> usize {
        self.start.degree()
    }

    /// Two-column listing: the blocks `w, x, y, z` of each step and its result.
    pub fn to_prose(&self) -> String {
        let mut rows = vec![(String::new(), self.start.to_string())];
        let mut here = self.start.to_term();
        for step in &self.steps {
            let blocks = redex_blocks(&here, &step.redex)
                .map(|bs| bs.iter().map(print_term).collect::<Vec<_>>().join(", "))
                .unwrap_or_else(|_| "?".into());
            rows.push((blocks, step.result.to_string()));
            here = step.result.to_term();
        }
        let width = rows.iter().map(|(b, _)| b.chars().count()).max().unwrap_or(0);
        let mut out = format!("degree {}\n", self.degree());
        for (blocks, result) in rows {
            let pad = width - blocks.chars().count();
            let _ = writeln!(out, "{blocks}{} => {result}", " ".repeat(pad));
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct StepRecord {
    #[serde(flatten)]
    redex: Redex,
    result: String,
}

#[derive(Serialize, Deserialize)]
struct ProofRecord {
    degree: usize,
    start: String,
    steps: Vec<StepRecord>,
    end: String,
}

impl Proof {
    pub fn to_json(&self) -> String {
        let rec = ProofRecord {
            degree: self.degree(),
            start: self.start.to_string(),
            steps: self
                .steps
                .iter()
                .map(|s| StepRecord { redex: s.redex.clone(), result: s.result.to_string() })
                .collect(),
            end: self.end.to_string(),
        };
        let mut out = serde_json::to_string_pretty(&rec).expect("plain data");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Proof> {
        let rec: ProofRecord = serde_json::from_str(text)?;
        let m = |s: &str| parse_monomial(s, rec.degree);
        Ok(Proof {
            start: m(&rec.start)?,
            steps: rec
                .steps
                .iter()
                .map(|s| Ok(ProofStep { redex: s.redex.clone(), result: m(&s.result)? }))
                .collect::<Result<_>>()?,
            end: m(&rec.end)?,
        })
    }
}

/// The redex of `t` whose four blocks are exactly `blocks`.
pub fn find_redex_by_blocks(t: &Term, blocks: &[Term; 4]) -> Option<Redex> {
    find_redexes(t).into_iter().find(|r| redex_blocks(t, r).is_ok_and(|b| &b == blocks))
}

/// Reads a listing in the format of [`Proof::to_prose`].
///
/// The first line is `degree N`; the next gives the start monomial after
/// `=>`; every further line names the blocks `w, x, y, z` before `=>` and
/// the claimed result after it. Blank lines and `#` comments are ignored.
/// Each step is resolved to the unique redex with those blocks, and the
/// claimed result is checked against the rewrite.
pub fn transcribe(text: &str) -> Result<Proof> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let err = |step: usize, message: String| Error::Transcript { step, message };
    let degree: usize = lines
        .next()
        .and_then(|l| l.strip_prefix("degree"))
        .and_then(|d| d.trim().parse().ok())
        .ok_or_else(|| err(0, "expected `degree N` on the first line".into()))?;
    let start_line = lines.next().ok_or_else(|| err(0, "missing start monomial".into()))?;
    let start_text = start_line.split_once("=>").map_or(start_line, |(_, r)| r).trim();
    let start = parse_monomial(start_text, degree).map_err(|e| err(0, e.to_string()))?;
    let mut here = start.clone();
    let mut steps = Vec::new();
    for (i, line) in lines.enumerate() {
        let step = i + 1;
        let (blocks, claimed) =
            line.split_once("=>").ok_or_else(|| err(step, "expected `w, x, y, z => result`".into()))?;
        let blocks: Vec<Term> = split_blocks(blocks)
            .iter()
            .map(|b| parse_term(b).map_err(|e| err(step, format!("block {b:?}: {e}"))))
            .collect::<Result<_>>()?;
        let blocks: [Term; 4] =
            blocks.try_into().map_err(|v: Vec<Term>| err(step, format!("expected 4 blocks, found {}", v.len())))?;
        let redex = find_redex_by_blocks(&here.to_term(), &blocks)
            .ok_or_else(|| err(step, format!("no interchange of {here} has these blocks")))?;
        let result = apply_redex(&here, &redex).map_err(|e| err(step, e.to_string()))?;
        let claimed = parse_monomial(claimed.trim(), degree).map_err(|e| err(step, e.to_string()))?;
        if claimed != result {
            return Err(err(step, format!("rewriting gives {result}, the listing claims {claimed}")));
        }
        steps.push(ProofStep { redex, result: result.clone() });
        here = result;
    }
    Ok(Proof { start, steps, end: here })
}

/// Splits on commas outside parentheses; LaTeX `\;` spacing is dropped.
fn split_blocks(text: &str) -> Vec<String> {
    let text = text.replace("\\;", " ");
    let mut out = vec![String::new()];
    let mut depth = 0i32;
    for c in text.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if c == ',' && depth == 0 {
            out.push(String::new());
        } else {
            out.last_mut().unwrap().push(c);
        }
    }
    out.into_iter().map(|s| s.trim().to_string()).collect()
}

/// Carries a proof through substitutions and outer multiplications.
///
/// Every step keeps its blocks (with the substitutions applied) and is
/// resolved again in the enlarged monomial, so the result is a proof of the
/// transformed identity in its own right.
pub fn lift_proof(p: &Proof, subs: &[(u8, Term)], outer: &[OuterFactor]) -> Result<Proof> {
    check_fresh(p.degree(), subs, outer)?;
    let lift = |m: &Monomial| Monomial::from_term(&transform_term(&m.to_term(), subs, outer));
    let start = lift(&p.start)?;
    let mut old = p.start.to_term();
    let mut here = start.clone();
    let mut steps = Vec::new();
    for (i, step) in p.steps.iter().enumerate() {
        let blocks = redex_blocks(&old, &step.redex)?.map(|b| transform_term(&b, subs, &[]));
        let redex = find_redex_by_blocks(&here.to_term(), &blocks).ok_or_else(|| Error::Transcript {
            step: i + 1,
            message: "step does not survive the substitution".into(),
        })?;
        here = apply_redex(&here, &redex)?;
        steps.push(ProofStep { redex, result: here.clone() });
        old = step.result.to_term();
    }
    Ok(Proof { start, steps, end: here })
}
