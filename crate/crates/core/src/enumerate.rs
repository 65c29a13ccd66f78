//! Exhaustive generators used as oracles: planar pairings, parenthetical
//! words, short terms and small normal forms.

use std::fmt;
use std::str::FromStr;

use crate::diagram::Diagram;
use crate::error::{DomainError, Error, Result};
use crate::term::{check_size, Generator, JonesNF, Term};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Paren {
    Open,
    Close,
}

/// A balanced word of parentheses.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ParenWord(Vec<Paren>);

impl ParenWord {
    pub fn new(symbols: Vec<Paren>) -> Result<Self> {
        let mut depth = 0usize;
        for (k, s) in symbols.iter().enumerate() {
            match s {
                Paren::Open => depth += 1,
                Paren::Close => {
                    depth = depth.checked_sub(1).ok_or_else(|| {
                        DomainError::Unbalanced(format!("close without open at {k}"))
                    })?;
                }
            }
        }
        if depth != 0 {
            return Err(DomainError::Unbalanced(format!("{depth} unclosed")).into());
        }
        Ok(ParenWord(symbols))
    }

    pub fn symbols(&self) -> &[Paren] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ParenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Paren::Open => "(",
                Paren::Close => ")",
            })?;
        }
        Ok(())
    }
}

impl FromStr for ParenWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .enumerate()
            .map(|(k, ch)| match ch {
                '(' => Ok(Paren::Open),
                ')' => Ok(Paren::Close),
                other => Err(DomainError::Unbalanced(format!("unexpected '{other}' at {k}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        ParenWord::new(symbols)
    }
}

/// Boundary codes in traversal order `-n, ..., -1, 1, ..., n`.
fn boundary(n: usize) -> impl Iterator<Item = i32> {
    let n = n as i32;
    (-n..=-1).chain(1..=n)
}

/// All planar pairings on `n` points per side, without circles, in
/// lexicographic order of their sorted pair lists. Brute force: every
/// perfect matching is generated and the crossing ones are dropped.
pub fn enumerate_pairings(n: usize) -> Vec<Diagram> {
    fn rec(free: &mut Vec<i32>, pairs: &mut Vec<(i32, i32)>, n: usize, out: &mut Vec<Diagram>) {
        let Some(&first) = free.first() else {
            if let Ok(d) = Diagram::from_pairs(n, pairs, 0) {
                out.push(d);
            }
            return;
        };
        for k in 1..free.len() {
            let other = free[k];
            let rest: Vec<i32> = free
                .iter()
                .copied()
                .filter(|&c| c != first && c != other)
                .collect();
            let saved = std::mem::replace(free, rest);
            pairs.push((first, other));
            rec(free, pairs, n, out);
            pairs.pop();
            *free = saved;
        }
    }
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(&mut boundary(n).collect(), &mut Vec::new(), n, &mut out);
    out
}

/// Each pair's smaller code opens, its larger code closes.
pub fn pairing_to_parenword(d: &Diagram) -> Result<ParenWord> {
    if d.circles() != 0 {
        return Err(Error::InvalidDiagram("diagram has circles".into()));
    }
    let symbols = boundary(d.n())
        .map(|c| {
            if c < d.partner(c) {
                Paren::Open
            } else {
                Paren::Close
            }
        })
        .collect();
    ParenWord::new(symbols)
}

pub fn parenword_to_pairing(w: &ParenWord, n: usize) -> Result<Diagram> {
    if n == 0 {
        return Err(DomainError::SizeTooSmall { n, min: 1 }.into());
    }
    if w.len() != 2 * n {
        return Err(DomainError::Unbalanced(format!(
            "expected {} symbols, got {}",
            2 * n,
            w.len()
        ))
        .into());
    }
    let mut open = Vec::new();
    let mut pairs = Vec::with_capacity(n);
    for (code, s) in boundary(n).zip(w.symbols()) {
        match s {
            Paren::Open => open.push(code),
            Paren::Close => pairs.push((open.pop().expect("balanced"), code)),
        }
    }
    Diagram::from_pairs(n, &pairs, 0)
}

/// Streams all words over `h1, ..., h(n-1), c` of length at most
/// `max_len`, shortest first, lexicographic within a length.
pub struct Terms {
    n: usize,
    max_len: usize,
    digits: Vec<usize>,
    done: bool,
}

impl Terms {
    fn alphabet_size(&self) -> usize {
        self.n
    }

    fn letter(&self, d: usize) -> Generator {
        if d + 1 < self.n {
            Generator::diapsis(d + 1)
        } else {
            Generator::Circle
        }
    }
}

impl Iterator for Terms {
    type Item = Term;

    fn next(&mut self) -> Option<Term> {
        if self.done {
            return None;
        }
        let word = self.digits.iter().map(|&d| self.letter(d)).collect();
        let out = Term::new(self.n, word).expect("alphabet is in range");
        // odometer increment, rightmost digit fastest
        let base = self.alphabet_size();
        let mut k = self.digits.len();
        loop {
            if k == 0 {
                if self.digits.len() == self.max_len {
                    self.done = true;
                } else {
                    self.digits = vec![0; self.digits.len() + 1];
                }
                break;
            }
            k -= 1;
            self.digits[k] += 1;
            if self.digits[k] < base {
                break;
            }
            self.digits[k] = 0;
        }
        Some(out)
    }
}

pub fn enumerate_terms(n: usize, max_len: usize) -> Result<Terms> {
    check_size(n)?;
    Ok(Terms {
        n,
        max_len,
        digits: Vec::new(),
        done: false,
    })
}

/// All Jones normal forms of `K_n` with at most `max_circles` circles,
/// ordered by circle count, then by block list.
pub fn enumerate_normal_forms(n: usize, max_circles: usize) -> Result<Vec<JonesNF>> {
    check_size(n)?;
    fn rec(n: usize, prefix: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        out.push(prefix.clone());
        let (b0, a0) = prefix.last().copied().unwrap_or((0, 0));
        for b in b0 + 1..n {
            for a in a0 + 1..=b {
                prefix.push((b, a));
                rec(n, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut lists = Vec::new();
    rec(n, &mut Vec::new(), &mut lists);
    let mut out = Vec::with_capacity(lists.len() * (max_circles + 1));
    for l in 0..=max_circles {
        for blocks in &lists {
            out.push(JonesNF::new(n, l, blocks.clone())?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::print;

    #[test]
    fn pairing_counts() {
        assert_eq!(enumerate_pairings(1), vec![Diagram::identity(1)]);
        let two = enumerate_pairings(2);
        assert_eq!(two.len(), 2);
        assert!(two.contains(&Diagram::identity(2)));
        assert!(two.contains(&Diagram::diapsis(2, 1).unwrap()));
        let counts: Vec<usize> = (3..=5).map(|n| enumerate_pairings(n).len()).collect();
        assert_eq!(counts, vec![5, 14, 42]);
    }

    #[test]
    fn pairings_are_sorted() {
        let ds = enumerate_pairings(4);
        let keys: Vec<_> = ds.iter().map(|d| d.pairs()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn parenword_examples() {
        let id = Diagram::identity(2);
        assert_eq!(pairing_to_parenword(&id).unwrap().to_string(), "(())");
        let h = Diagram::diapsis(2, 1).unwrap();
        assert_eq!(pairing_to_parenword(&h).unwrap().to_string(), "()()");
        let w: ParenWord = "()()".parse().unwrap();
        assert_eq!(parenword_to_pairing(&w, 2).unwrap(), h);
        assert!(parenword_to_pairing(&ParenWord::new(vec![]).unwrap(), 0).is_err());
        assert!("(()".parse::<ParenWord>().is_err());
        assert!(")(".parse::<ParenWord>().is_err());
        assert!(parenword_to_pairing(&w, 3).is_err());
    }

    #[test]
    fn parenword_bijection() {
        for n in 1..=7 {
            for d in enumerate_pairings(n) {
                let w = pairing_to_parenword(&d).unwrap();
                assert_eq!(w.len(), 2 * n);
                assert_eq!(parenword_to_pairing(&w, n).unwrap(), d);
            }
        }
    }

    #[test]
    fn term_enumeration() {
        let got: Vec<String> = enumerate_terms(3, 1).unwrap().map(|t| print(&t)).collect();
        assert_eq!(got, vec!["1", "h1", "h2", "c"]);
        assert_eq!(enumerate_terms(3, 2).unwrap().count(), 13);
        assert_eq!(enumerate_terms(2, 0).unwrap().count(), 1);
        assert_eq!(enumerate_terms(3, 6).unwrap().count(), 1093);
        assert!(enumerate_terms(1, 2).is_err());
    }

    #[test]
    fn normal_form_enumeration() {
        let counts: Vec<usize> = (2..=4)
            .map(|n| enumerate_normal_forms(n, 0).unwrap().len())
            .collect();
        assert_eq!(counts, vec![2, 5, 14]);
        let got: Vec<String> = enumerate_normal_forms(2, 1)
            .unwrap()
            .iter()
            .map(|f| f.to_string())
            .collect();
        assert_eq!(got, vec!["1", "h1", "c", "c h1"]);
    }
}
