//! Reduction of block words to Jones normal form.
//!
//! A redex is an adjacent pair `h[i,j] h[k,l]` with `i >= k` or `j >= l`,
//! or a block followed by a circle. Every rule strictly decreases the
//! measure `(n1, n2)`, so any redex selection strategy terminates.

use std::fmt;

use crate::error::{Error, Result};
use crate::parser::print_word;
use crate::term::{measure, Generator, JonesNF, Measure, Term};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Rule {
    /// `h[i,j] h[k,l] = h[k,l] h[i,j]` for `j >= k+2`.
    HI,
    /// `h[i,j] h[k,l] = h[i,l]` for `i >= l`, `|k-j| = 1`.
    HII,
    /// `h[i,j] c = c h[i,j]`.
    HcI,
    /// `h[i,j] h[j,l] = c h[i,l]`.
    HcII,
    /// `h[i,j] h[k,l] = h[k-2,l] h[i,j+2]` for `k >= j+2`, `i >= k`, `j >= l`.
    HIII1,
    /// `h[i,j] h[k,l] = h[i,l] h[k,j+2]` for `k >= j+2`, `i < k`, `j >= l`.
    HIII2,
    /// `h[i,j] h[k,l] = h[k-2,j] h[i,l]` for `k >= j+2`, `i >= k`, `j < l`.
    HIII3,
    /// `1 t = t 1 = t`. Flat words carry no units, so this never fires.
    Unit,
}

impl Rule {
    pub const ALL: [Rule; 8] = [
        Rule::HI,
        Rule::HII,
        Rule::HcI,
        Rule::HcII,
        Rule::HIII1,
        Rule::HIII2,
        Rule::HIII3,
        Rule::Unit,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Rule::HI => "hI",
            Rule::HII => "hII",
            Rule::HcI => "hcI",
            Rule::HcII => "hcII",
            Rule::HIII1 => "hIII.1",
            Rule::HIII2 => "hIII.2",
            Rule::HIII3 => "hIII.3",
            Rule::Unit => "unit",
        }
    }

    /// Whether the rule lowers `n1`; the others keep `n1` and lower `n2`.
    pub fn lowers_weight(&self) -> bool {
        matches!(
            self,
            Rule::HII | Rule::HcII | Rule::HIII1 | Rule::HIII2 | Rule::HIII3
        )
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Classifies the adjacent pair `left right`, returning the rule whose
/// left-hand side it matches, or `None` if the pair is not a redex.
pub fn classify(left: Generator, right: Generator) -> Option<Rule> {
    let (i, j) = match left {
        Generator::Block { upper, lower } => (upper, lower),
        Generator::Circle => return None,
    };
    let (k, l) = match right {
        Generator::Block { upper, lower } => (upper, lower),
        Generator::Circle => return Some(Rule::HcI),
    };
    if i < k && j < l {
        return None;
    }
    Some(if j >= k + 2 {
        Rule::HI
    } else if k == j {
        Rule::HcII
    } else if j.abs_diff(k) == 1 {
        Rule::HII
    } else {
        // k >= j + 2
        match (i >= k, j >= l) {
            (true, true) => Rule::HIII1,
            (false, true) => Rule::HIII2,
            (true, false) => Rule::HIII3,
            (false, false) => unreachable!("excluded above"),
        }
    })
}

/// Right-hand side of `rule` applied to the pair `left right`.
fn rewrite_pair(rule: Rule, left: Generator, right: Generator) -> Option<Vec<Generator>> {
    use Generator::Block as B;
    if classify(left, right) != Some(rule) {
        return None;
    }
    let rhs = match (left, right) {
        (B { .. }, Generator::Circle) => vec![Generator::Circle, left],
        (B { upper: i, lower: j }, B { upper: k, lower: l }) => match rule {
            Rule::HI => vec![right, left],
            Rule::HII => vec![B { upper: i, lower: l }],
            Rule::HcII => vec![Generator::Circle, B { upper: i, lower: l }],
            Rule::HIII1 => vec![
                B {
                    upper: k - 2,
                    lower: l,
                },
                B {
                    upper: i,
                    lower: j + 2,
                },
            ],
            Rule::HIII2 => vec![
                B { upper: i, lower: l },
                B {
                    upper: k,
                    lower: j + 2,
                },
            ],
            Rule::HIII3 => vec![
                B {
                    upper: k - 2,
                    lower: j,
                },
                B { upper: i, lower: l },
            ],
            Rule::HcI | Rule::Unit => return None,
        },
        (Generator::Circle, _) => return None,
    };
    Some(rhs)
}

/// Which redex to fire when several are present.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// Leftmost redex `(position, rule)`; `None` means the word is normal.
pub fn find_redex(t: &Term) -> Option<(usize, Rule)> {
    find_redex_from(t.word(), 0)
}

pub fn find_redex_with(t: &Term, strategy: Strategy) -> Option<(usize, Rule)> {
    match strategy {
        Strategy::Leftmost => find_redex(t),
        Strategy::Rightmost => {
            let w = t.word();
            (0..w.len().saturating_sub(1))
                .rev()
                .find_map(|p| classify(w[p], w[p + 1]).map(|r| (p, r)))
        }
    }
}

fn find_redex_from(w: &[Generator], from: usize) -> Option<(usize, Rule)> {
    (from..w.len().saturating_sub(1)).find_map(|p| classify(w[p], w[p + 1]).map(|r| (p, r)))
}

/// Fires `rule` on the pair at `position`.
pub fn apply_rule(t: &Term, position: usize, rule: Rule) -> Result<Term> {
    let w = t.word();
    if position + 1 >= w.len() {
        return Err(Error::Internal(format!(
            "no pair at position {position} in a word of length {}",
            w.len()
        )));
    }
    let rhs = rewrite_pair(rule, w[position], w[position + 1]).ok_or_else(|| {
        Error::Internal(format!("rule {rule} does not match at position {position}"))
    })?;
    let mut word = Vec::with_capacity(w.len());
    word.extend_from_slice(&w[..position]);
    word.extend(rhs);
    word.extend_from_slice(&w[position + 2..]);
    Ok(Term::from_parts(t.n(), word))
}

/// One redex firing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RewriteStep {
    pub rule: Rule,
    pub position: usize,
    pub before: Vec<Generator>,
    pub after: Vec<Generator>,
}

impl RewriteStep {
    /// Replays this step on the word it was recorded against.
    pub fn replay(&self, t: &Term) -> Result<Term> {
        let w = t.word();
        let end = self.position + self.before.len();
        if end > w.len() || w[self.position..end] != self.before[..] {
            return Err(Error::Internal(format!(
                "step {self} does not match the word {t}"
            )));
        }
        let mut word = w[..self.position].to_vec();
        word.extend_from_slice(&self.after);
        word.extend_from_slice(&w[end..]);
        Term::new(t.n(), word)
    }
}

impl fmt::Display for RewriteStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}@{}: {} => {}",
            self.rule,
            self.position,
            print_word(&self.before),
            print_word(&self.after)
        )
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalizationTrace {
    pub input: Term,
    pub steps: Vec<RewriteStep>,
    pub output: JonesNF,
    /// `measures[0]` is the measure of the input; `measures[s + 1]` the
    /// measure after step `s`.
    pub measures: Vec<Measure>,
}

impl NormalizationTrace {
    /// Line-oriented rendering, one `rule@position: before => after` per step.
    pub fn steps_text(&self) -> String {
        self.steps.iter().map(|s| format!("{s}\n")).collect()
    }

    /// Intermediate words, starting with the input and ending with the
    /// normal form.
    pub fn words(&self) -> Result<Vec<Term>> {
        let mut out = vec![self.input.clone()];
        for step in &self.steps {
            let next = step.replay(out.last().expect("non-empty"))?;
            out.push(next);
        }
        Ok(out)
    }
}

/// Reads a redex-free word as a Jones normal form.
pub fn packaged(t: &Term) -> Result<JonesNF> {
    let w = t.word();
    let circles = w.iter().take_while(|g| **g == Generator::Circle).count();
    let mut blocks = Vec::with_capacity(w.len() - circles);
    for g in &w[circles..] {
        match *g {
            Generator::Block { upper, lower } => blocks.push((upper, lower)),
            Generator::Circle => {
                return Err(Error::Internal(format!("circle after a block in {t}")))
            }
        }
    }
    JonesNF::new(t.n(), circles, blocks)
        .map_err(|e| Error::Internal(format!("redex-free word {t} is not normal: {e}")))
}

/// Leftmost-redex normalization with a full trace.
pub fn normalize(t: &Term) -> NormalizationTrace {
    normalize_with(t, Strategy::Leftmost)
}

pub fn normalize_with(t: &Term, strategy: Strategy) -> NormalizationTrace {
    let mut current = t.clone();
    let mut steps = Vec::new();
    let mut measures = vec![measure(&current)];
    while let Some((position, rule)) = find_redex_with(&current, strategy) {
        let next = apply_rule(&current, position, rule).expect("find_redex returned a match");
        let after_len = next.len() + 2 - current.len();
        steps.push(RewriteStep {
            rule,
            position,
            before: current.word()[position..position + 2].to_vec(),
            after: next.word()[position..position + after_len].to_vec(),
        });
        measures.push(measure(&next));
        current = next;
    }
    let output = packaged(&current).expect("a word without redexes is in Jones normal form");
    NormalizationTrace {
        input: t.clone(),
        steps,
        output,
        measures,
    }
}

/// Untraced leftmost normalization.
pub fn normal_form(t: &Term) -> JonesNF {
    let mut w = t.word().to_vec();
    let mut from = 0;
    while let Some((p, rule)) = find_redex_from(&w, from) {
        let rhs = rewrite_pair(rule, w[p], w[p + 1]).expect("classified pair rewrites");
        w.splice(p..p + 2, rhs);
        // Pairs left of p-1 are unchanged and were not redexes.
        from = p.saturating_sub(1);
    }
    packaged(&Term::from_parts(t.n(), w)).expect("a word without redexes is in Jones normal form")
}
