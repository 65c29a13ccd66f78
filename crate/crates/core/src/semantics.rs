//! Interpretation of terms as diagrams, and the way back.
//!
//! `delta` sends `h^i` to `H^i`, `c` to `C` and a product `t u` to
//! `delta(t) ∘ delta(u)`, with `delta(t)` at the bottom. Reading a diagram
//! back goes either through its slope points, which give the Jones normal
//! form directly, or by peeling off one diapsis at a time.

use crate::diagram::{compose, Diagram, Thread, ThreadClass};
use crate::error::{DomainError, Error, Result};
use crate::rewrite::normal_form;
use crate::term::{check_block, Generator, JonesNF, Term};

/// The diagram of a single block `h[b,a]`: a cup at `a, a+1` on top, a cap
/// at `b, b+1` at the bottom, falling threads `m -> -(m-2)` for
/// `a+2 <= m <= b+1`, and vertical threads elsewhere.
pub fn delta_block(n: usize, b: usize, a: usize) -> Result<Diagram> {
    check_block(n, b, a)?;
    let mut d = Diagram::identity(n);
    let (a, b) = (a as i32, b as i32);
    d.set(a, a + 1);
    d.set(-b, -(b + 1));
    for m in a + 2..=b + 1 {
        d.set(m, -(m - 2));
    }
    debug_assert!(d.is_planar());
    Ok(d)
}

fn delta_generator(n: usize, g: Generator) -> Diagram {
    match g {
        Generator::Block { upper, lower } => {
            delta_block(n, upper, lower).expect("terms hold in-range blocks")
        }
        Generator::Circle => Diagram::circle(n),
    }
}

/// The diagram of `t`, first factor at the bottom.
pub fn delta(t: &Term) -> Diagram {
    let n = t.n();
    let mut acc = Diagram::identity(n);
    for &g in t.word() {
        acc = match g {
            Generator::Circle => {
                let c = acc.circles() + 1;
                acc.with_circles(c)
            }
            _ => compose(&acc, &delta_generator(n, g)).expect("sizes agree"),
        };
    }
    acc
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EqualityVerdict {
    pub equal: bool,
    /// Normal forms of the two sides.
    pub witness: (JonesNF, JonesNF),
}

fn check_same_size(t: &Term, u: &Term) -> Result<()> {
    if t.n() != u.n() {
        return Err(Error::SizeMismatch {
            left: t.n(),
            right: u.n(),
        });
    }
    Ok(())
}

/// Decides `t = u` in `K_n` by comparing normal forms.
pub fn decide_equal(t: &Term, u: &Term) -> Result<EqualityVerdict> {
    check_same_size(t, u)?;
    let (ft, fu) = (normal_form(t), normal_form(u));
    Ok(EqualityVerdict {
        equal: ft == fu,
        witness: (ft, fu),
    })
}

/// Like [`decide_equal`], additionally comparing `delta(t)` with `delta(u)`.
/// A disagreement between the two routes is an internal error.
pub fn decide_equal_checked(t: &Term, u: &Term) -> Result<EqualityVerdict> {
    let verdict = decide_equal(t, u)?;
    let by_diagram = delta(t) == delta(u);
    if by_diagram != verdict.equal {
        return Err(Error::Internal(format!(
            "normal forms say {} but diagrams say {} for {t} vs {u}",
            verdict.equal, by_diagram
        )));
    }
    Ok(verdict)
}

/// Reads the Jones normal form off the slope points: `l` is the circle count
/// and the blocks are `(b_i, a_i)` with `T = a_1 < ... < a_k` and
/// `B = b_1 < ... < b_k`.
pub fn diagram_to_nf(d: &Diagram) -> Result<JonesNF> {
    let (top, bottom) = d.slope_points();
    if top.len() != bottom.len() {
        return Err(Error::InvalidDiagram(format!(
            "{} top but {} bottom slope points",
            top.len(),
            bottom.len()
        )));
    }
    let blocks = bottom.into_iter().zip(top).collect();
    JonesNF::new(d.n(), d.circles(), blocks).map_err(|e| match e {
        Error::Domain(DomainError::SizeTooSmall { .. }) => e,
        other => Error::InvalidDiagram(format!("slope points are not a normal form: {other}")),
    })
}

/// One peel step: the diapsis index removed and the span after removal.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PeelStep {
    pub index: usize,
    pub span_before: usize,
    pub span_after: usize,
}

/// Rebuilds a term for `d` from `I`, `C` and the diapsides.
pub fn peel(d: &Diagram) -> Result<Term> {
    peel_traced(d).map(|(t, _)| t)
}

/// [`peel`], also returning each step in the order it was taken.
///
/// Circles are split off first. Then, while the span is positive, take the
/// span-1 cup `(j, j+1)` with the greatest `j` and a second thread `ξ`
/// covering `(j, j+1)`: a cup if there is one (largest left end), else a
/// transversal (largest left end if it starts on top, smallest if it starts
/// at the bottom), else a cap (smallest left end). Rewiring the two into
/// `p -> j` and `j+1 -> q` gives `D2` with `D ≃ D2 ∘ H^j` and two less span.
pub fn peel_traced(d: &Diagram) -> Result<(Term, Vec<PeelStep>)> {
    if d.n() < 2 {
        return Err(DomainError::SizeTooSmall { n: d.n(), min: 2 }.into());
    }
    if !d.is_planar() {
        return Err(Error::InvalidDiagram("threads cross".into()));
    }
    let n = d.n();
    let mut cur = d.clone().with_circles(0);
    let mut span = cur.span();
    let mut peeled = Vec::new();
    let mut steps = Vec::new();
    while span > 0 {
        let j = (1..n)
            .rev()
            .find(|&i| cur.partner(i as i32) == i as i32 + 1)
            .ok_or_else(|| Error::Internal(format!("no span-1 cup in {cur}")))?;
        let upsilon = Thread::new(j as i32, j as i32 + 1);
        let covering: Vec<Thread> = cur
            .threads()
            .filter(|t| *t != upsilon && t.covers(j))
            .collect();
        let of = |want: fn(&Thread) -> bool| covering.iter().copied().filter(want).collect::<Vec<_>>();
        let left = |t: &Thread| t.positions().0;
        let cups = of(|t| t.class() == ThreadClass::Cup);
        // A transversal whose left end is on top, and the mirror case.
        let from_top = of(|t| {
            matches!(t.class(), ThreadClass::Transversal { falling: true, .. })
        });
        let from_bottom = of(|t| {
            matches!(
                t.class(),
                ThreadClass::Transversal {
                    falling: false,
                    vertical: false
                }
            )
        });
        let caps = of(|t| t.class() == ThreadClass::Cap);
        let xi = if !cups.is_empty() {
            cups.into_iter().max_by_key(left)
        } else if !from_top.is_empty() {
            from_top.into_iter().max_by_key(left)
        } else if !from_bottom.is_empty() {
            from_bottom.into_iter().min_by_key(left)
        } else {
            caps.into_iter().min_by_key(left)
        }
        .ok_or_else(|| Error::Internal(format!("nothing else covers ({j},{}) in {cur}", j + 1)))?;

        // End codes of xi ordered by position: p < q.
        let (x_p, x_q) = if xi.lo.unsigned_abs() < xi.hi.unsigned_abs() {
            (xi.lo, xi.hi)
        } else {
            (xi.hi, xi.lo)
        };
        cur.set(x_p, j as i32);
        cur.set(j as i32 + 1, x_q);
        let after = cur.span();
        steps.push(PeelStep {
            index: j,
            span_before: span,
            span_after: after,
        });
        if after + 2 != span || !cur.is_planar() {
            return Err(Error::Internal(format!(
                "peeling h{j} left span {after} from {span}"
            )));
        }
        span = after;
        peeled.push(j);
    }
    let mut word = vec![Generator::Circle; d.circles()];
    word.extend(peeled.iter().rev().map(|&j| Generator::diapsis(j)));
    Ok((Term::new(n, word)?, steps))
}
