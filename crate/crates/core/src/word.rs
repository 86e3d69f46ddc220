//! Words in a free group, encoded as sequences of signed generator labels.
//!
//! The letter `+k` stands for the generator `t_k`, the letter `-k` for its
//! inverse; labels are 1-based and `0` is never a valid letter. Words are
//! plain `Vec<i32>`, so callers can build them directly; every function here
//! returns freely reduced output.

use crate::{Error, Result};

pub type Word = Vec<i32>;

/// Free reduction: cancels adjacent `x x⁻¹` pairs until none remain.
pub fn reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &x in w {
        if let Some(&last) = out.last() {
            if last == -x {
                out.pop();
                continue;
            }
        }
        out.push(x);
    }
    out
}

/// Cyclic reduction: free reduction followed by stripping matching
/// first/last letters.
pub fn cyclically_reduce(w: &[i32]) -> Word {
    let mut v = reduce(w);
    let mut start = 0;
    let mut end = v.len();
    while end - start >= 2 && v[start] == -v[end - 1] {
        start += 1;
        end -= 1;
    }
    v.truncate(end);
    v.drain(..start);
    v
}

/// The inverse word: reversed order, inverted letters, freely reduced.
pub fn invert(w: &[i32]) -> Word {
    let rev: Vec<i32> = w.iter().rev().map(|&x| -x).collect();
    reduce(&rev)
}

/// Freely reduced concatenation.
pub fn concat(a: &[i32], b: &[i32]) -> Word {
    let mut v = Vec::with_capacity(a.len() + b.len());
    v.extend_from_slice(a);
    v.extend_from_slice(b);
    reduce(&v)
}

/// The relator `lhs · rhs⁻¹`, freely reduced.
pub fn relator(lhs: &[i32], rhs: &[i32]) -> Word {
    concat(lhs, &invert(rhs))
}

/// Replaces every occurrence of generator `gen` by `replacement`
/// (and of its inverse by the inverted replacement), then freely reduces.
pub fn substitute(w: &[i32], gen: u32, replacement: &[i32]) -> Word {
    let g = gen as i32;
    let inv = invert(replacement);
    let mut out = Vec::with_capacity(w.len());
    for &x in w {
        if x == g {
            out.extend_from_slice(replacement);
        } else if x == -g {
            out.extend_from_slice(&inv);
        } else {
            out.push(x);
        }
    }
    reduce(&out)
}

/// Net exponent of generator `gen` in `w`.
pub fn exponent_sum(w: &[i32], gen: u32) -> i64 {
    let g = gen as i32;
    w.iter()
        .map(|&x| {
            if x == g {
                1
            } else if x == -g {
                -1
            } else {
                0
            }
        })
        .sum()
}

/// Net exponents of generators `1..=num_gens`.
pub fn exponent_sums(w: &[i32], num_gens: usize) -> Vec<i64> {
    let mut sums = vec![0i64; num_gens];
    for &x in w {
        let g = x.unsigned_abs() as usize;
        if g >= 1 && g <= num_gens {
            sums[g - 1] += if x > 0 { 1 } else { -1 };
        }
    }
    sums
}

/// Canonical representative of a word up to cyclic rotation and inversion:
/// the lexicographically least rotation of its cyclic reduction or of the
/// inverted cyclic reduction. Two relators define the same relation class
/// exactly when their canonical forms coincide.
pub fn canonical_cyclic(w: &[i32]) -> Word {
    let v = cyclically_reduce(w);
    if v.is_empty() {
        return v;
    }
    let mut best: Option<Word> = None;
    for cand in [v.clone(), invert(&v)] {
        for r in 0..cand.len() {
            let mut rot = Vec::with_capacity(cand.len());
            rot.extend_from_slice(&cand[r..]);
            rot.extend_from_slice(&cand[..r]);
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap()
}

/// Whether two words agree as cyclic relators (up to rotation and inversion).
pub fn cyclic_equivalent(a: &[i32], b: &[i32]) -> bool {
    canonical_cyclic(a) == canonical_cyclic(b)
}

/// Renders a word in `t1 t2^-1` notation; the empty word renders as `1`.
pub fn format_word(w: &[i32]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let mut parts = Vec::with_capacity(w.len());
    let mut pos = 0;
    while pos < w.len() {
        let x = w[pos];
        let mut run = 1;
        while pos + run < w.len() && w[pos + run] == x {
            run += 1;
        }
        let g = x.unsigned_abs();
        let exp = if x > 0 { run as i64 } else { -(run as i64) };
        if exp == 1 {
            parts.push(format!("t{g}"));
        } else {
            parts.push(format!("t{g}^{exp}"));
        }
        pos += run;
    }
    parts.join(" ")
}

/// Parses `t1 t2^-1 t3^2` notation (whitespace- or `*`-separated). `1` and
/// the empty string denote the identity. The result is freely reduced.
pub fn parse_word(s: &str) -> Result<Word> {
    let mut out: Word = Vec::new();
    for token in s.split(|c: char| c.is_whitespace() || c == '*') {
        if token.is_empty() || token == "1" {
            continue;
        }
        let rest = token
            .strip_prefix('t')
            .ok_or_else(|| Error::Parse(format!("expected generator like t3, got `{token}`")))?;
        let (gen_str, exp) = match rest.split_once('^') {
            Some((g, e)) => {
                let exp: i64 = e
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{token}`")))?;
                (g, exp)
            }
            None => (rest, 1),
        };
        let gen: u32 = gen_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad generator label in `{token}`")))?;
        if gen == 0 {
            return Err(Error::Parse("generator labels are 1-based".into()));
        }
        let letter = if exp >= 0 { gen as i32 } else { -(gen as i32) };
        for _ in 0..exp.unsigned_abs() {
            out.push(letter);
        }
    }
    Ok(reduce(&out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction() {
        assert_eq!(reduce(&[1, -1]), Vec::<i32>::new());
        assert_eq!(reduce(&[1, 2, -2, -1, 3]), vec![3]);
        assert_eq!(reduce(&[1, 2, -3, 3, -2, 1]), vec![1, 1]);
        assert_eq!(cyclically_reduce(&[1, 2, 3, -2, -1]), vec![3]);
        assert_eq!(cyclically_reduce(&[1, -1]), Vec::<i32>::new());
        // a conjugate of a single letter
        assert_eq!(cyclically_reduce(&[2, 1, -2]), vec![1]);
    }

    #[test]
    fn inverse_and_relator() {
        assert_eq!(invert(&[1, -2, 3]), vec![-3, 2, -1]);
        assert_eq!(relator(&[1, 2, 1], &[2, 1, 2]), vec![1, 2, 1, -2, -1, -2]);
        assert_eq!(relator(&[1, 2], &[1, 2]), Vec::<i32>::new());
    }

    #[test]
    fn substitution() {
        // b := a turns the braid relator into a pure power relation check
        assert_eq!(substitute(&[1, 2, 1, -2, -1, -2], 2, &[1]), Vec::<i32>::new());
        // c := b a b⁻¹
        assert_eq!(substitute(&[3, 1], 3, &[2, 1, -2]), vec![2, 1, -2, 1]);
        assert_eq!(substitute(&[-3], 3, &[2, 1, -2]), vec![2, -1, -2]);
    }

    #[test]
    fn exponents() {
        let w = [1, 1, -2, 3, -1];
        assert_eq!(exponent_sum(&w, 1), 1);
        assert_eq!(exponent_sum(&w, 2), -1);
        assert_eq!(exponent_sums(&w, 4), vec![1, -1, 1, 0]);
    }

    #[test]
    fn cyclic_canonical() {
        // rotations and inversion all collapse to one representative
        let r = [1, 2, 1, -2, -1, -2];
        for rot in 0..r.len() {
            let mut w: Vec<i32> = r[rot..].to_vec();
            w.extend_from_slice(&r[..rot]);
            assert!(cyclic_equivalent(&r, &w));
            assert!(cyclic_equivalent(&r, &invert(&w)));
        }
        assert!(!cyclic_equivalent(&[1, 2], &[1, -2]));
        assert!(cyclic_equivalent(&[3, 1, -3, 2], &[1, -3, 2, 3]));
    }

    #[test]
    fn format_and_parse() {
        assert_eq!(format_word(&[]), "1");
        assert_eq!(format_word(&[1, -2, -2, 3]), "t1 t2^-2 t3");
        assert_eq!(parse_word("t1 t2^-2 t3").unwrap(), vec![1, -2, -2, 3]);
        assert_eq!(parse_word("1").unwrap(), Vec::<i32>::new());
        assert_eq!(parse_word("").unwrap(), Vec::<i32>::new());
        assert_eq!(parse_word("t1*t1^-1").unwrap(), Vec::<i32>::new());
        assert!(parse_word("x1").is_err());
        assert!(parse_word("t0").is_err());
        assert!(parse_word("t1^x").is_err());

        // round-trip on an asymptote-shaped word
        let w = vec![-1, 4, 3, 2, 4, 3, 2, 1];
        assert_eq!(parse_word(&format_word(&w)).unwrap(), w);
    }
}
