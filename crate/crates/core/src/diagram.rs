//! Combinatorial n-diagrams.
//!
//! An n-diagram is determined up to equivalence by a planar perfect pairing
//! of its 2n boundary points together with its number of circular
//! components. Top point `(i, a)` has code `+i`, bottom point `(i, 0)` has
//! code `-i`. Equivalence of diagrams is plain equality of this encoding.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Diagram {
    n: usize,
    /// Involution on codes, indexed by [`Diagram::slot`].
    partner: Vec<i32>,
    circles: usize,
}

/// A thread given by its two end codes, `lo < hi`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Thread {
    pub lo: i32,
    pub hi: i32,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ThreadClass {
    Cup,
    Cap,
    Transversal { vertical: bool, falling: bool },
}

fn pos(code: i32) -> usize {
    code.unsigned_abs() as usize
}

impl Thread {
    pub fn new(a: i32, b: i32) -> Self {
        Thread {
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    pub fn class(&self) -> ThreadClass {
        match (self.lo > 0, self.hi > 0) {
            (true, true) => ThreadClass::Cup,
            (false, false) => ThreadClass::Cap,
            _ => {
                // lo is the bottom end, hi the top end
                let (top, bottom) = (pos(self.hi), pos(self.lo));
                ThreadClass::Transversal {
                    vertical: top == bottom,
                    falling: top < bottom,
                }
            }
        }
    }

    pub fn span(&self) -> usize {
        pos(self.lo).abs_diff(pos(self.hi))
    }

    /// Positions of the end points, smaller first.
    pub fn positions(&self) -> (usize, usize) {
        let (x, y) = (pos(self.lo), pos(self.hi));
        (x.min(y), x.max(y))
    }

    /// Whether the thread covers `(m, m+1)`.
    pub fn covers(&self, m: usize) -> bool {
        covers(*self, m)
    }
}

/// `true` iff `min position <= m` and `m + 1 <= max position`.
pub fn covers(thread: Thread, m: usize) -> bool {
    let (lo, hi) = thread.positions();
    lo <= m && m < hi
}

impl Diagram {
    fn slot(n: usize, code: i32) -> usize {
        if code > 0 {
            n + code as usize - 1
        } else {
            (n as i32 + code) as usize
        }
    }

    fn code(n: usize, slot: usize) -> i32 {
        if slot < n {
            slot as i32 - n as i32
        } else {
            (slot - n + 1) as i32
        }
    }

    /// Builds a diagram from its threads, validating that the pairs form a
    /// planar perfect matching on `{-n..-1, 1..n}`.
    pub fn from_pairs(n: usize, pairs: &[(i32, i32)], circles: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidDiagram("n must be at least 1".into()));
        }
        if pairs.len() != n {
            return Err(Error::InvalidDiagram(format!(
                "expected {n} pairs, got {}",
                pairs.len()
            )));
        }
        let mut partner = vec![0i32; 2 * n];
        for &(a, b) in pairs {
            for code in [a, b] {
                if code == 0 || pos(code) > n {
                    return Err(Error::InvalidDiagram(format!("code {code} out of range")));
                }
            }
            if a == b {
                return Err(Error::InvalidDiagram(format!("code {a} paired with itself")));
            }
            for (x, y) in [(a, b), (b, a)] {
                let slot = &mut partner[Self::slot(n, x)];
                if *slot != 0 {
                    return Err(Error::InvalidDiagram(format!("code {x} used twice")));
                }
                *slot = y;
            }
        }
        let d = Diagram {
            n,
            partner,
            circles,
        };
        if !d.is_planar() {
            return Err(Error::InvalidDiagram("threads cross".into()));
        }
        Ok(d)
    }

    pub(crate) fn from_partner(n: usize, partner: Vec<i32>, circles: usize) -> Self {
        let d = Diagram {
            n,
            partner,
            circles,
        };
        debug_assert!(d.is_planar(), "non-planar diagram {d:?}");
        d
    }

    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|s| -Self::code(n, s)).collect();
        Diagram {
            n,
            partner,
            circles: 0,
        }
    }

    /// `H^i`: a cup and a cap at `i, i+1`, vertical threads elsewhere.
    pub fn diapsis(n: usize, i: usize) -> Result<Self> {
        if i < 1 || i + 1 > n {
            return Err(crate::error::DomainError::IndexOutOfRange {
                index: i,
                max: n.saturating_sub(1),
            }
            .into());
        }
        let mut d = Diagram::identity(n);
        let (a, b) = (i as i32, i as i32 + 1);
        d.set(a, b);
        d.set(-a, -b);
        Ok(d)
    }

    /// `C`: the identity pairing with one circle.
    pub fn circle(n: usize) -> Self {
        let mut d = Diagram::identity(n);
        d.circles = 1;
        d
    }

    pub(crate) fn set(&mut self, a: i32, b: i32) {
        let n = self.n;
        self.partner[Self::slot(n, a)] = b;
        self.partner[Self::slot(n, b)] = a;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn circles(&self) -> usize {
        self.circles
    }

    pub fn with_circles(mut self, circles: usize) -> Self {
        self.circles = circles;
        self
    }

    pub fn partner(&self, code: i32) -> i32 {
        self.partner[Self::slot(self.n, code)]
    }

    /// Threads sorted by their smaller code.
    pub fn threads(&self) -> impl Iterator<Item = Thread> + '_ {
        (0..2 * self.n).filter_map(move |s| {
            let code = Self::code(self.n, s);
            let other = self.partner[s];
            (code < other).then(|| Thread::new(code, other))
        })
    }

    /// Pairs `(min, max)` sorted by min code.
    pub fn pairs(&self) -> Vec<(i32, i32)> {
        self.threads().map(|t| (t.lo, t.hi)).collect()
    }

    /// Non-crossing check over the boundary order `-n, ..., -1, 1, ..., n`.
    pub fn is_planar(&self) -> bool {
        let mut open = Vec::new();
        for s in 0..2 * self.n {
            let code = Self::code(self.n, s);
            let other = self.partner[s];
            if other == 0 || self.partner(other) != code {
                return false;
            }
            if code < other {
                open.push(code);
            } else if open.pop() != Some(other) {
                return false;
            }
        }
        open.is_empty()
    }

    pub fn count_class(&self, pred: impl Fn(ThreadClass) -> bool) -> usize {
        self.threads().filter(|t| pred(t.class())).count()
    }

    pub fn cups(&self) -> usize {
        self.count_class(|c| c == ThreadClass::Cup)
    }

    pub fn caps(&self) -> usize {
        self.count_class(|c| c == ThreadClass::Cap)
    }

    pub fn transversals(&self) -> usize {
        self.count_class(|c| matches!(c, ThreadClass::Transversal { .. }))
    }

    /// Sum of the spans of all threads.
    pub fn span(&self) -> usize {
        self.threads().map(|t| t.span()).sum()
    }

    /// Top slope points `T` and bottom slope points `B` (each bottom point
    /// `(j, 0)` recorded as `j - 1`), both ascending.
    pub fn slope_points(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.n as i32;
        let top = (1..=n)
            .filter(|&i| pos(self.partner(i)) > i as usize)
            .map(|i| i as usize)
            .collect();
        let bottom = (1..=n)
            .filter(|&j| pos(self.partner(-j)) < j as usize)
            .map(|j| j as usize - 1)
            .collect();
        (top, bottom)
    }

    /// Number of threads covering `(m, m+1)`.
    pub fn covering_count(&self, m: usize) -> usize {
        self.threads().filter(|t| t.covers(m)).count()
    }

    /// Checks the structural facts every n-diagram satisfies: as many cups
    /// as caps, even span, every `(m, m+1)` covered an even number of times,
    /// a span-1 cup (and cap) whenever there are cups (caps), and as many
    /// top as bottom slope points. Returns a description of each failure.
    pub fn remark_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let (cups, caps) = (self.cups(), self.caps());
        if cups != caps {
            out.push(format!("{cups} cups but {caps} caps"));
        }
        let span = self.span();
        if span % 2 != 0 {
            out.push(format!("odd span {span}"));
        }
        for m in 1..self.n {
            let k = self.covering_count(m);
            if k % 2 != 0 {
                out.push(format!("({m},{}) covered by {k} threads", m + 1));
            }
        }
        let short = |class| self.threads().any(|t| t.class() == class && t.span() == 1);
        if cups > 0 && !short(ThreadClass::Cup) {
            out.push("no cup of span 1".into());
        }
        if caps > 0 && !short(ThreadClass::Cap) {
            out.push("no cap of span 1".into());
        }
        let (t, b) = self.slope_points();
        if t.len() != b.len() {
            out.push(format!("{} top but {} bottom slope points", t.len(), b.len()));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&DiagramJson::from(self)).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: DiagramJson =
            serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        raw.try_into()
    }
}

fn check_sizes(a: &Diagram, b: &Diagram) -> Result<()> {
    if a.n != b.n {
        return Err(Error::SizeMismatch {
            left: a.n,
            right: b.n,
        });
    }
    Ok(())
}

/// Stacks `top` above `bottom`, gluing top's bottom boundary to bottom's
/// top boundary. Loops closed off entirely at the interface become circles.
pub fn compose(bottom: &Diagram, top: &Diagram) -> Result<Diagram> {
    check_sizes(bottom, top)?;
    let n = bottom.n;
    #[derive(Clone, Copy)]
    enum Side {
        Top,
        Bottom,
    }
    // Interface node k is top's code -k glued to bottom's code +k.
    let mut visited = vec![false; n + 1];
    // Follows the path entering `side` at `code` until it leaves through a
    // free boundary point.
    let walk = |mut side: Side, mut code: i32, visited: &mut Vec<bool>| -> i32 {
        loop {
            match side {
                Side::Top => {
                    let p = top.partner(code);
                    if p > 0 {
                        return p;
                    }
                    visited[pos(p)] = true;
                    side = Side::Bottom;
                    code = -p;
                }
                Side::Bottom => {
                    let p = bottom.partner(code);
                    if p < 0 {
                        return p;
                    }
                    visited[pos(p)] = true;
                    side = Side::Top;
                    code = -p;
                }
            }
        }
    };
    let mut partner = vec![0i32; 2 * n];
    for i in 1..=n as i32 {
        if partner[Diagram::slot(n, i)] == 0 {
            let end = walk(Side::Top, i, &mut visited);
            partner[Diagram::slot(n, i)] = end;
            partner[Diagram::slot(n, end)] = i;
        }
        if partner[Diagram::slot(n, -i)] == 0 {
            let end = walk(Side::Bottom, -i, &mut visited);
            partner[Diagram::slot(n, -i)] = end;
            partner[Diagram::slot(n, end)] = -i;
        }
    }
    let mut loops = 0;
    for k in 1..=n {
        if visited[k] {
            continue;
        }
        loops += 1;
        let mut node = k;
        // Alternate bottom's cups and top's caps until the loop closes.
        loop {
            visited[node] = true;
            let via_bottom = pos(bottom.partner(node as i32));
            visited[via_bottom] = true;
            node = pos(top.partner(-(via_bottom as i32)));
            if node == k {
                break;
            }
        }
    }
    Ok(Diagram::from_partner(
        n,
        partner,
        bottom.circles + top.circles + loops,
    ))
}

/// Equality of the pairing and of the circle count.
pub fn equivalent(a: &Diagram, b: &Diagram) -> Result<bool> {
    check_sizes(a, b)?;
    Ok(a == b)
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (a, b)) in self.pairs().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{{a},{b}}}")?;
        }
        write!(f, "}} + {} circles", self.circles)
    }
}

/// Interchange form: `{"n": .., "pairs": [[min, max], ..], "circles": ..}`.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(deny_unknown_fields)]
pub struct DiagramJson {
    pub n: usize,
    pub pairs: Vec<[i32; 2]>,
    pub circles: usize,
}

impl From<&Diagram> for DiagramJson {
    fn from(d: &Diagram) -> Self {
        DiagramJson {
            n: d.n,
            pairs: d.pairs().into_iter().map(|(a, b)| [a, b]).collect(),
            circles: d.circles,
        }
    }
}

impl TryFrom<DiagramJson> for Diagram {
    type Error = Error;

    fn try_from(raw: DiagramJson) -> Result<Self> {
        let pairs: Vec<_> = raw.pairs.iter().map(|p| (p[0], p[1])).collect();
        Diagram::from_pairs(raw.n, &pairs, raw.circles)
    }
}
