use crate::error::{Error, Result};

fn binomial(n: u128, k: u128) -> Option<u128> {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at every step: acc * (n - i) is divisible by (i + 1)
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// Number of association types `T(1), ..., T(n_max)`, i.e. the large
/// Schröder numbers shifted by one: `T(n + 1) = (1/n) Σ_{i=1..n} 2^i C(n,i) C(n,i-1)`.
///
/// Arithmetic is checked; an overflow is reported, never wrapped.
pub fn schroeder_large(n_max: usize) -> Result<Vec<u128>> {
    if n_max == 0 {
        return Err(Error::InvalidDegree { degree: 0, reason: "n_max must be at least 1" });
    }
    let mut out = Vec::with_capacity(n_max);
    out.push(1);
    for n in 2..=n_max {
        let nn = (n - 1) as u128;
        let mut sum: u128 = 0;
        for i in 1..=nn {
            let term = 2u128
                .checked_pow(i as u32)
                .and_then(|p| p.checked_mul(binomial(nn, i)?))
                .and_then(|p| p.checked_mul(binomial(nn, i - 1)?))
                .ok_or(Error::Overflow(n))?;
            sum = sum.checked_add(term).ok_or(Error::Overflow(n))?;
        }
        out.push(sum / nn);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_ten_values() {
        assert_eq!(schroeder_large(10).unwrap(), vec![1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098]);
        assert_eq!(schroeder_large(1).unwrap(), vec![1]);
    }

    /// Independent route: T(n) counts lattice paths with steps E, N, NE
    /// staying weakly below the diagonal.
    #[test]
    fn agrees_with_lattice_path_count() {
        let n_max = 20;
        let mut paths = vec![vec![0u128; n_max + 1]; n_max + 1];
        paths[0][0] = 1;
        for x in 0..=n_max {
            for y in 0..=x {
                if x == 0 && y == 0 {
                    continue;
                }
                let mut v = 0;
                if y < x {
                    v += paths[x - 1][y];
                }
                if y > 0 {
                    v += paths[x][y - 1];
                }
                if x > 0 && y > 0 {
                    v += paths[x - 1][y - 1];
                }
                paths[x][y] = v;
            }
        }
        let t = schroeder_large(n_max).unwrap();
        // the lattice count for (n, n) is T(n + 1) in this 1-based indexing
        for n in 1..n_max {
            assert_eq!(t[n], paths[n][n], "T({})", n + 1);
        }
    }

    #[test]
    fn overflow_is_detected() {
        assert!(schroeder_large(20).is_ok());
        assert!(matches!(schroeder_large(200), Err(Error::Overflow(_))));
        assert!(schroeder_large(0).is_err());
    }
}
