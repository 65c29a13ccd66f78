//! Acceptance criteria, one line of output per criterion.
//!
//! Runs with `harness = false` so the report is printed even on success:
//! `cargo test -p kauffman --test acceptance`.

use std::collections::{HashMap, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use kauffman::cli::run;
use kauffman::{
    compose, delta, diagram_to_nf, enumerate_normal_forms, enumerate_pairings, enumerate_terms,
    expand, nf_to_term, normalize, normalize_with, parse, peel_traced, print, Diagram, Generator,
    JonesNF, Strategy, Term,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x4b61_7566_666d_616e;

/// Records the structural checks run on every diagram built by the criteria.
#[derive(Default)]
struct Audit {
    checked: usize,
    violations: Vec<String>,
}

impl Audit {
    fn check(&mut self, d: &Diagram, context: &str) {
        self.checked += 1;
        for v in d.remark_violations() {
            if self.violations.len() < 20 {
                self.violations.push(format!("{context}: {d}: {v}"));
            }
        }
    }

    /// `delta` by an explicit fold over diapsis diagrams, auditing every
    /// intermediate product and cross-checking the library's `delta`.
    fn delta(&mut self, t: &Term, context: &str) -> Diagram {
        let n = t.n();
        let mut acc = Diagram::identity(n);
        self.check(&acc, context);
        for g in expand(t).word() {
            let factor = match *g {
                Generator::Block { upper, .. } => Diagram::diapsis(n, upper).unwrap(),
                Generator::Circle => Diagram::circle(n),
            };
            self.check(&factor, context);
            acc = compose(&acc, &factor).unwrap();
            self.check(&acc, context);
        }
        let direct = delta(t);
        if direct != acc {
            self.violations
                .push(format!("{context}: delta({t}) = {direct}, fold gives {acc}"));
        }
        acc
    }
}

struct Report {
    lines: Vec<(bool, String)>,
}

impl Report {
    fn record(&mut self, id: u32, title: &str, result: Result<String, String>) {
        let (ok, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        let line = format!(
            "[{}] criterion {id:>2}: {title} -- {detail}",
            if ok { "PASS" } else { "FAIL" }
        );
        println!("{line}");
        self.lines.push((ok, line));
    }
}

fn worked_example() -> JonesNF {
    JonesNF::new(11, 6, vec![(3, 1), (4, 4), (7, 7), (9, 8), (10, 9)]).unwrap()
}

/// Applies random defining relations, read right to left, to a word of
/// diapsides and circles: far commutation `h^i h^j <-> h^j h^i`, circle
/// commutation, `h^i -> h^i h^(i±1) h^i` and `c h^i -> h^i h^i`. The result
/// equals the input in K_n without consulting the rewrite engine.
fn scramble(t: &Term, rng: &mut impl Rng, moves: usize, max_len: usize) -> Term {
    let n = t.n();
    let mut w: Vec<Generator> = expand(t).into_word();
    let index = |g: Generator| match g {
        Generator::Block { upper, .. } => Some(upper),
        Generator::Circle => None,
    };
    for _ in 0..moves {
        if w.len() < 2 {
            break;
        }
        let p = rng.gen_range(0..w.len() - 1);
        match rng.gen_range(0..4) {
            0 | 1 => {
                let swappable = match (index(w[p]), index(w[p + 1])) {
                    (Some(i), Some(j)) => i.abs_diff(j) >= 2,
                    _ => true,
                };
                if swappable {
                    w.swap(p, p + 1);
                }
            }
            2 if w.len() + 2 <= max_len => {
                if let Some(i) = index(w[p]) {
                    let up = rng.gen_bool(0.5);
                    let k = if up { i + 1 } else { i.wrapping_sub(1) };
                    if (1..n).contains(&k) {
                        w.splice(p..=p, [Generator::diapsis(i), Generator::diapsis(k), Generator::diapsis(i)]);
                    }
                }
            }
            _ => {
                if let (None, Some(i)) = (index(w[p]), index(w[p + 1])) {
                    w[p] = Generator::diapsis(i);
                }
            }
        }
    }
    Term::new(n, w).unwrap()
}

fn random_term(rng: &mut impl Rng, max_n: usize, max_len: usize) -> Term {
    let n = rng.gen_range(2..=max_n);
    let len = rng.gen_range(0..=max_len);
    let word = (0..len)
        .map(|_| {
            if rng.gen_bool(0.15) {
                Generator::Circle
            } else {
                let (x, y) = (rng.gen_range(1..n), rng.gen_range(1..n));
                kauffman::make_block(n, x.max(y), x.min(y)).unwrap()
            }
        })
        .collect();
    Term::new(n, word).unwrap()
}

/// Uniform choice of a normal form among all subsets of lower and upper
/// indices of equal size with `a_i <= b_i`, by rejection.
fn random_nf(rng: &mut impl Rng, max_n: usize, max_circles: usize) -> JonesNF {
    loop {
        let n = rng.gen_range(2..=max_n);
        let l = rng.gen_range(0..=max_circles);
        let k = rng.gen_range(0..n);
        let pick = |rng: &mut dyn rand::RngCore| {
            let mut all: Vec<usize> = (1..n).collect();
            for i in (1..all.len()).rev() {
                all.swap(i, rng.gen_range(0..=i));
            }
            let mut chosen: Vec<usize> = all.into_iter().take(k).collect();
            chosen.sort_unstable();
            chosen
        };
        let (a, b) = (pick(rng), pick(rng));
        let blocks: Vec<(usize, usize)> = b.into_iter().zip(a).collect();
        if let Ok(f) = JonesNF::new(n, l, blocks) {
            return f;
        }
    }
}

fn criterion_1(audit: &mut Audit) -> Result<String, String> {
    let f = worked_example();
    let want = print(&nf_to_term(&f));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut slowest = Duration::ZERO;
    let mut samples = vec![nf_to_term(&f)];
    for k in 0..50 {
        samples.push(scramble(&nf_to_term(&f), &mut rng, 40 + 10 * k, 80));
    }
    let distinct: HashSet<&Term> = samples.iter().collect();
    for t in &samples {
        let start = Instant::now();
        let argv: Vec<String> = ["kauffman", "nf", "-n", "11", &print(t)]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let out = run(&argv, &mut std::io::empty());
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        if out.code != 0 || out.stdout.trim() != want {
            return Err(format!("nf of {t} gave {:?} {}", out.stdout, out.stderr));
        }
        let d = audit.delta(t, "criterion 1");
        let via = diagram_to_nf(&d).map_err(|e| e.to_string())?;
        if via != f {
            return Err(format!("diagram route for {t} gave {via}"));
        }
        if elapsed >= Duration::from_secs(1) {
            return Err(format!("{t} took {elapsed:?}"));
        }
    }
    Ok(format!(
        "{} distinct products -> {want}, slowest {slowest:?}",
        distinct.len()
    ))
}

fn criterion_2(audit: &mut Audit) -> Result<String, String> {
    let start = Instant::now();
    let words: Vec<Term> = enumerate_terms(3, 6).map_err(|e| e.to_string())?.collect();
    if words.len() != 1093 {
        return Err(format!("{} words", words.len()));
    }
    let mut nf_ids: HashMap<JonesNF, usize> = HashMap::new();
    let mut diagram_ids: HashMap<Diagram, usize> = HashMap::new();
    let mut ids = Vec::with_capacity(words.len());
    for t in &words {
        let k = nf_ids.len();
        let a = *nf_ids.entry(normalize(t).output).or_insert(k);
        let d = audit.delta(t, "criterion 2");
        let k = diagram_ids.len();
        let b = *diagram_ids.entry(d).or_insert(k);
        ids.push((a, b));
    }
    let mut disagreements = 0u64;
    let mut comparisons = 0u64;
    for (i, x) in ids.iter().enumerate() {
        for y in &ids[i..] {
            comparisons += 1;
            if (x.0 == y.0) != (x.1 == y.1) {
                disagreements += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    if disagreements > 0 {
        return Err(format!("{disagreements} disagreements"));
    }
    if elapsed >= Duration::from_secs(60) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!(
        "{} words, {comparisons} pairs, {} classes, 0 disagreements, {elapsed:?}",
        words.len(),
        nf_ids.len()
    ))
}

fn criterion_3(audit: &mut Audit) -> Result<String, String> {
    let start = Instant::now();
    let want = [2usize, 5, 14, 42, 132];
    let mut got = Vec::new();
    for (n, &expected) in (2..=6).zip(&want) {
        let pairings = enumerate_pairings(n);
        for d in &pairings {
            audit.check(d, "criterion 3");
        }
        let forms = enumerate_normal_forms(n, 0).map_err(|e| e.to_string())?.len();
        if pairings.len() != expected || forms != expected {
            return Err(format!(
                "n={n}: {} pairings, {forms} normal forms, expected {expected}",
                pairings.len()
            ));
        }
        got.push(expected.to_string());
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(30) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{} for n = 2..6, {elapsed:?}", got.join(", ")))
}

fn random_terms() -> Vec<Term> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    (0..1000).map(|_| random_term(&mut rng, 12, 100)).collect()
}

fn criterion_4(terms: &[Term]) -> Result<String, String> {
    let mut steps = 0usize;
    let mut violations = 0usize;
    for t in terms {
        let tr = normalize(t);
        steps += tr.steps.len();
        violations += tr.measures.windows(2).filter(|m| m[1] >= m[0]).count();
        if tr.measures.len() != tr.steps.len() + 1 {
            return Err(format!("trace of {t} lost measures"));
        }
    }
    if violations > 0 {
        return Err(format!("{violations} non-decreasing steps"));
    }
    Ok(format!("{} terms, {steps} steps, 0 violations", terms.len()))
}

fn criterion_5(terms: &[Term]) -> Result<String, String> {
    let disagreements = terms
        .iter()
        .filter(|t| {
            normalize_with(t, Strategy::Leftmost).output
                != normalize_with(t, Strategy::Rightmost).output
        })
        .count();
    if disagreements > 0 {
        return Err(format!("{disagreements} disagreements"));
    }
    Ok(format!("{} terms, 0 disagreements", terms.len()))
}

fn criterion_6(audit: &mut Audit) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    let mut steps = 0usize;
    for _ in 0..200 {
        let t = random_term(&mut rng, 8, 24);
        let words = normalize(&t).words().map_err(|e| e.to_string())?;
        let mut prev = audit.delta(&words[0], "criterion 6");
        for w in &words[1..] {
            let next = audit.delta(w, "criterion 6");
            if next != prev {
                return Err(format!("step to {w} changed the diagram"));
            }
            prev = next;
            steps += 1;
        }
    }
    Ok(format!("200 traces, {steps} steps, all diagram-preserving"))
}

fn criterion_7(audit: &mut Audit) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let mut sizes = HashSet::new();
    for _ in 0..500 {
        let f = random_nf(&mut rng, 10, 3);
        sizes.insert(f.blocks().len());
        let d = audit.delta(&nf_to_term(&f), "criterion 7");
        let (top, bottom) = d.slope_points();
        if top != f.lower_indices() || bottom != f.upper_indices() {
            return Err(format!("{f}: T = {top:?}, B = {bottom:?}"));
        }
    }
    Ok(format!("500 normal forms, block counts {:?}", {
        let mut s: Vec<_> = sizes.into_iter().collect();
        s.sort_unstable();
        s
    }))
}

fn criterion_8(audit: &mut Audit) -> Result<String, String> {
    let mut total = 0;
    let mut peel_steps = 0;
    for n in 2..=5 {
        for d in enumerate_pairings(n) {
            audit.check(&d, "criterion 8");
            let (t, steps) = peel_traced(&d).map_err(|e| e.to_string())?;
            if let Some(s) = steps.iter().find(|s| s.span_before != s.span_after + 2) {
                return Err(format!("{d}: step {s:?}"));
            }
            let want = diagram_to_nf(&d).map_err(|e| e.to_string())?;
            if normalize(&t).output != want {
                return Err(format!("peel({d}) = {t}, expected {want}"));
            }
            if audit.delta(&t, "criterion 8") != d {
                return Err(format!("delta(peel({d})) differs"));
            }
            total += 1;
            peel_steps += steps.len();
        }
    }
    Ok(format!("{total} diagrams, {peel_steps} peel steps"))
}

fn criterion_9(audit: &Audit) -> Result<String, String> {
    if audit.violations.is_empty() && audit.checked > 0 {
        Ok(format!("{} diagrams audited, 0 violations", audit.checked))
    } else {
        Err(format!(
            "{} diagrams audited; {}",
            audit.checked,
            audit.violations.join(" | ")
        ))
    }
}

const GOLDEN: &[(&str, usize, &str)] = &[
    ("1", 5, "1"),
    ("", 3, "1"),
    ("h2 h1 h2", 3, "h2 h1 h2"),
    ("h[3,3]", 4, "h3"),
    ("c c h1", 2, "c^2 h1"),
    ("c^6 h[3,1] h[4,4] h[7,7] h[9,8] h[10,9]", 11, "c^6 h[3,1] h4 h7 h[9,8] h[10,9]"),
    ("h1*h2 * c", 3, "h1 h2 c"),
    ("1 h1 1 c^0 c^1", 2, "h1 c"),
    ("  h[ 4 , 2 ]   h3\th1\n", 6, "h[4,2] h3 h1"),
    ("c h1 c c h2 c^3", 3, "c h1 c^2 h2 c^3"),
    ("h[10,1] h10", 11, "h[10,1] h10"),
];

fn criterion_10() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 10);
    for _ in 0..1000 {
        let t = random_term(&mut rng, 12, 40);
        let back = parse(&print(&t), t.n()).map_err(|e| format!("{t}: {e}"))?;
        if back != t {
            return Err(format!("{t} came back as {back}"));
        }
    }
    for &(input, n, want) in GOLDEN {
        let once = print(&parse(input, n).map_err(|e| format!("{input:?}: {e}"))?);
        let twice = print(&parse(&once, n).map_err(|e| format!("{once:?}: {e}"))?);
        if once != want || twice != once {
            return Err(format!("{input:?} printed {once:?} then {twice:?}, golden {want:?}"));
        }
    }
    Ok(format!("1000 random terms, {} golden inputs", GOLDEN.len()))
}

fn main() -> ExitCode {
    let mut report = Report { lines: Vec::new() };
    let mut audit = Audit::default();
    let terms = random_terms();
    report.record(1, "worked example normal form", criterion_1(&mut audit));
    report.record(2, "exhaustive word problem n=3", criterion_2(&mut audit));
    report.record(3, "Catalan counts", criterion_3(&mut audit));
    report.record(4, "termination and measure", criterion_4(&terms));
    report.record(5, "strategy independence", criterion_5(&terms));
    report.record(6, "per-step soundness", criterion_6(&mut audit));
    report.record(7, "slope points of normal forms", criterion_7(&mut audit));
    report.record(8, "peel agreement", criterion_8(&mut audit));
    report.record(9, "diagram invariants", criterion_9(&audit));
    report.record(10, "parser round trip", criterion_10());
    let failed = report.lines.iter().filter(|(ok, _)| !ok).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        report.lines.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
