//! Text notation for terms, in the style `(a•b)∘(c•(d∘e))`.
//!
//! Variables are single letters. The letter `o` is never a variable; it is
//! accepted as an ASCII spelling of `∘`, so position 15 is written `p`.
//! `ℓ` and `\ell` read as `l`. LaTeX operator names `\circh`, `\circ` and
//! `\bullet` are accepted so displays can be pasted verbatim.

use crate::error::{Error, Result};
use crate::term::tree::{Op, Term, Tree};

/// Letters naming positions `1, 2, 3, ...`.
pub const ALPHABET: &str = "abcdefghijklmnpqrstuvwxyz";

pub const MAX_LETTERS: usize = 25;

pub fn letter(var: u8) -> char {
    ALPHABET.as_bytes()[var as usize] as char
}

pub fn var_of(letter: char) -> Option<u8> {
    ALPHABET.find(letter).map(|i| i as u8)
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Token {
    Open,
    Close,
    Op(Op),
    Letter(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    const WORDS: [(&str, Option<Op>); 4] =
        [("\\circh", Some(Op::H)), ("\\circ", Some(Op::H)), ("\\bullet", Some(Op::V)), ("\\ell", None)];
    let mut out = Vec::new();
    let mut i = 0;
    'outer: while i < text.len() {
        let rest = &text[i..];
        for (word, op) in WORDS {
            if rest.starts_with(word) {
                out.push((i, op.map_or(Token::Letter('l'), Token::Op)));
                i += word.len();
                continue 'outer;
            }
        }
        let c = rest.chars().next().unwrap();
        let tok = match c {
            c if c.is_whitespace() => None,
            '(' => Some(Token::Open),
            ')' => Some(Token::Close),
            '∘' | '◦' | 'o' => Some(Token::Op(Op::H)),
            '•' | '∙' | '·' | '*' => Some(Token::Op(Op::V)),
            'ℓ' => Some(Token::Letter('l')),
            c if c.is_ascii_lowercase() => Some(Token::Letter(c)),
            other => return Err(Error::Parse { offset: i, message: format!("unexpected character {other:?}") }),
        };
        if let Some(t) = tok {
            out.push((i, t));
        }
        i += c.len_utf8();
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<Token> {
        self.tokens.get(self.pos).map(|&(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.offset(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Tree<char>> {
        let mut factors = vec![self.operand()?];
        let mut op: Option<Op> = None;
        while let Some(Token::Op(o)) = self.peek() {
            if op.is_some_and(|prev| prev != o) {
                return self.err("mixed operations need parentheses");
            }
            op = Some(o);
            self.pos += 1;
            factors.push(self.operand()?);
        }
        Ok(match op {
            None => factors.pop().unwrap(),
            Some(op) => Tree::join(op, factors),
        })
    }

    fn operand(&mut self) -> Result<Tree<char>> {
        match self.peek() {
            Some(Token::Letter(c)) => {
                self.pos += 1;
                Ok(Tree::Leaf(c))
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(Token::Close) {
                    return self.err("unbalanced parentheses: expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Token::Close) => self.err("unbalanced parentheses: unexpected ')'"),
            Some(Token::Op(_)) => self.err("expected a variable or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a canonicalized tree whose leaves are the letters as written.
pub fn parse_letters(text: &str) -> Result<Tree<char>> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, end: text.len() };
    let t = p.expr()?;
    if p.peek().is_some() {
        return p.err("unbalanced parentheses: trailing input");
    }
    Ok(t)
}

/// Parses a term, numbering variables by their place in [`ALPHABET`].
pub fn parse_term(text: &str) -> Result<Term> {
    let t = parse_letters(text)?;
    let mut bad = None;
    let term = t.map_leaves(&mut |&c| {
        var_of(c).unwrap_or_else(|| {
            bad = Some(c);
            0
        })
    });
    match bad {
        Some(c) => Err(Error::Parse { offset: 0, message: format!("{c:?} is not a variable letter") }),
        None => Ok(term),
    }
}

pub fn print_tree<L>(t: &Tree<L>, label: &mut impl FnMut(&L) -> String) -> String {
    fn walk<L>(t: &Tree<L>, label: &mut impl FnMut(&L) -> String, top: bool, out: &mut String) {
        match t {
            Tree::Leaf(l) => out.push_str(&label(l)),
            Tree::Node(op, ch) => {
                if !top {
                    out.push('(');
                }
                for (i, c) in ch.iter().enumerate() {
                    if i > 0 {
                        out.push(op.symbol());
                    }
                    walk(c, label, false, out);
                }
                if !top {
                    out.push(')');
                }
            }
        }
    }
    let mut out = String::new();
    walk(t, label, true, &mut out);
    out
}

pub fn print_term(t: &Term) -> String {
    print_tree(t, &mut |&v| letter(v).to_string())
}

/// Prints an association type with letters assigned left to right.
pub fn print_shape(s: &Tree<()>) -> String {
    let mut next = 0u8;
    print_tree(s, &mut |_| {
        next += 1;
        letter(next - 1).to_string()
    })
}
