//! Terms of `K_n` in the block formulation.
//!
//! A term is a flat word over blocks `h[b,a]` (the product
//! `h^b h^(b-1) ... h^a`) and the circle `c`. Associativity and the unit
//! laws make parenthesization and explicit units redundant, so the empty
//! word is the unit `1`.

use std::fmt;

use crate::error::{DomainError, Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Generator {
    /// `h[upper,lower]`, with `lower <= upper`. A singular block
    /// (`upper == lower`) is the diapsis `h^upper`.
    Block { upper: usize, lower: usize },
    Circle,
}

impl Generator {
    pub(crate) const fn block(upper: usize, lower: usize) -> Self {
        Generator::Block { upper, lower }
    }

    pub const fn diapsis(i: usize) -> Self {
        Generator::Block { upper: i, lower: i }
    }

    pub fn is_singular(&self) -> bool {
        matches!(self, Generator::Block { upper, lower } if upper == lower)
    }

    /// Weight `b - a + 2` of a block; circles weigh nothing.
    pub fn weight(&self) -> u64 {
        match *self {
            Generator::Block { upper, lower } => (upper - lower + 2) as u64,
            Generator::Circle => 0,
        }
    }
}

pub(crate) fn check_size(n: usize) -> Result<(), DomainError> {
    if n < 2 {
        return Err(DomainError::SizeTooSmall { n, min: 2 });
    }
    Ok(())
}

pub(crate) fn check_block(n: usize, upper: usize, lower: usize) -> Result<(), DomainError> {
    check_size(n)?;
    for index in [upper, lower] {
        if index < 1 || index > n - 1 {
            return Err(DomainError::IndexOutOfRange { index, max: n - 1 });
        }
    }
    if lower > upper {
        return Err(DomainError::InvertedBlock { upper, lower });
    }
    Ok(())
}

/// Builds the block `h[b,a]` of `K_n`, checking `1 <= a <= b <= n-1`.
pub fn make_block(n: usize, b: usize, a: usize) -> Result<Generator> {
    check_block(n, b, a)?;
    Ok(Generator::block(b, a))
}

/// A word of `K_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    n: usize,
    word: Vec<Generator>,
}

impl Term {
    pub fn new(n: usize, word: Vec<Generator>) -> Result<Self> {
        check_size(n)?;
        for g in &word {
            if let Generator::Block { upper, lower } = *g {
                check_block(n, upper, lower)?;
            }
        }
        Ok(Self { n, word })
    }

    pub(crate) fn from_parts(n: usize, word: Vec<Generator>) -> Self {
        debug_assert!(Term::new(n, word.clone()).is_ok());
        Self { n, word }
    }

    pub fn unit(n: usize) -> Result<Self> {
        Term::new(n, Vec::new())
    }

    /// Word of diapsides `h^i1 h^i2 ...`.
    pub fn from_diapsides(n: usize, indices: &[usize]) -> Result<Self> {
        Term::new(n, indices.iter().map(|&i| Generator::diapsis(i)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &[Generator] {
        &self.word
    }

    pub fn into_word(self) -> Vec<Generator> {
        self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_unit(&self) -> bool {
        self.word.is_empty()
    }

    /// Concatenation `self * other`.
    pub fn concat(&self, other: &Term) -> Result<Term> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Ok(Term { n: self.n, word })
    }
}

/// Rewrites every block `h[b,a]` as the word of diapsides `h^b ... h^a`.
pub fn expand(t: &Term) -> Term {
    let mut word = Vec::with_capacity(t.word.len());
    for g in &t.word {
        match *g {
            Generator::Block { upper, lower } => {
                word.extend((lower..=upper).rev().map(Generator::diapsis));
            }
            Generator::Circle => word.push(Generator::Circle),
        }
    }
    Term { n: t.n, word }
}

/// Termination measure `(n1, n2)`, ordered lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Measure {
    pub n1: u64,
    pub n2: u64,
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n1, self.n2)
    }
}

/// `n1` sums block weights. `n2` sums, for each block, the number of later
/// blocks `h[b',a']` with `b >= b'` or `a >= a'`, plus, for each circle, the
/// number of blocks before it. Flat words hold no explicit units.
pub fn measure(t: &Term) -> Measure {
    let word = &t.word;
    let mut n1 = 0;
    let mut n2 = 0;
    let mut blocks_seen = 0u64;
    for (p, g) in word.iter().enumerate() {
        match *g {
            Generator::Block { upper, lower } => {
                n1 += g.weight();
                blocks_seen += 1;
                n2 += word[p + 1..]
                    .iter()
                    .filter(|h| match **h {
                        Generator::Block {
                            upper: u2,
                            lower: l2,
                        } => upper >= u2 || lower >= l2,
                        Generator::Circle => false,
                    })
                    .count() as u64;
            }
            Generator::Circle => n2 += blocks_seen,
        }
    }
    Measure { n1, n2 }
}

/// Jones normal form `c^l h[b1,a1] ... h[bk,ak]` with strictly increasing
/// `a`s and `b`s.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct JonesNF {
    n: usize,
    circles: usize,
    blocks: Vec<(usize, usize)>,
}

impl JonesNF {
    /// `blocks` are `(b, a)` pairs, upper index first.
    pub fn new(n: usize, circles: usize, blocks: Vec<(usize, usize)>) -> Result<Self> {
        for &(b, a) in &blocks {
            check_block(n, b, a)?;
        }
        check_size(n)?;
        for w in blocks.windows(2) {
            let ((b1, a1), (b2, a2)) = (w[0], w[1]);
            if a1 >= a2 || b1 >= b2 {
                return Err(DomainError::NotNormal(format!(
                    "h[{b1},{a1}] h[{b2},{a2}] breaks strict increase"
                ))
                .into());
            }
        }
        Ok(Self { n, circles, blocks })
    }

    pub fn unit(n: usize) -> Result<Self> {
        JonesNF::new(n, 0, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn circles(&self) -> usize {
        self.circles
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    /// The lower indices `a1 < ... < ak`.
    pub fn lower_indices(&self) -> Vec<usize> {
        self.blocks.iter().map(|&(_, a)| a).collect()
    }

    /// The upper indices `b1 < ... < bk`.
    pub fn upper_indices(&self) -> Vec<usize> {
        self.blocks.iter().map(|&(b, _)| b).collect()
    }

    pub fn to_term(&self) -> Term {
        nf_to_term(self)
    }
}

impl fmt::Display for JonesNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_term(), f)
    }
}

pub fn nf_to_term(f: &JonesNF) -> Term {
    let mut word = vec![Generator::Circle; f.circles];
    word.extend(f.blocks.iter().map(|&(b, a)| Generator::block(b, a)));
    Term { n: f.n, word }
}
