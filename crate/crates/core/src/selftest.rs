//! Exhaustive small-n checks that tie the syntactic and diagrammatic
//! routes together. Run from the CLI with `kauffman selftest`.

use std::collections::{HashMap, HashSet};

use crate::diagram::Diagram;
use crate::enumerate::{
    enumerate_normal_forms, enumerate_pairings, enumerate_terms, pairing_to_parenword,
    parenword_to_pairing,
};
use crate::rewrite::normal_form;
use crate::semantics::{delta, diagram_to_nf, peel_traced};
use crate::term::{nf_to_term, JonesNF};

pub struct Check {
    pub name: &'static str,
    pub outcome: Result<String, String>,
}

fn catalan_counts() -> Result<String, String> {
    let mut seen = Vec::new();
    for n in 2..=6 {
        let pairings = enumerate_pairings(n).len();
        let forms = enumerate_normal_forms(n, 0).map_err(|e| e.to_string())?.len();
        if pairings != forms {
            return Err(format!("n={n}: {pairings} pairings vs {forms} normal forms"));
        }
        seen.push(pairings.to_string());
    }
    Ok(seen.join(", "))
}

fn parenword_bijection() -> Result<String, String> {
    let mut total = 0;
    for n in 1..=6 {
        for d in enumerate_pairings(n) {
            let w = pairing_to_parenword(&d).map_err(|e| e.to_string())?;
            let back = parenword_to_pairing(&w, n).map_err(|e| e.to_string())?;
            if back != d {
                return Err(format!("{d} -> {w} -> {back}"));
            }
            total += 1;
        }
    }
    Ok(format!("{total} pairings"))
}

fn word_problem(n: usize, max_len: usize) -> Result<String, String> {
    let mut by_nf: HashMap<JonesNF, usize> = HashMap::new();
    let mut by_diagram: HashMap<Diagram, usize> = HashMap::new();
    let mut joint: HashSet<(usize, usize)> = HashSet::new();
    let mut count = 0;
    for t in enumerate_terms(n, max_len).map_err(|e| e.to_string())? {
        let k = by_nf.len();
        let a = *by_nf.entry(normal_form(&t)).or_insert(k);
        let k = by_diagram.len();
        let b = *by_diagram.entry(delta(&t)).or_insert(k);
        joint.insert((a, b));
        count += 1;
    }
    // The two partitions agree iff the class pairing is a bijection.
    if joint.len() != by_nf.len() || by_nf.len() != by_diagram.len() {
        return Err(format!(
            "{} normal-form classes, {} diagram classes, {} joint",
            by_nf.len(),
            by_diagram.len(),
            joint.len()
        ));
    }
    Ok(format!("{count} words, {} classes", by_nf.len()))
}

fn peel_agreement() -> Result<String, String> {
    let mut total = 0;
    for n in 2..=5 {
        for d in enumerate_pairings(n) {
            let (t, steps) = peel_traced(&d).map_err(|e| e.to_string())?;
            if steps.iter().any(|s| s.span_before != s.span_after + 2) {
                return Err(format!("span did not drop by 2 peeling {d}"));
            }
            let want = diagram_to_nf(&d).map_err(|e| e.to_string())?;
            if normal_form(&t) != want {
                return Err(format!("peel({d}) = {t}, expected {want}"));
            }
            total += 1;
        }
    }
    Ok(format!("{total} diagrams"))
}

fn delta_bijective() -> Result<String, String> {
    for n in 2..=5 {
        let forms = enumerate_normal_forms(n, 2).map_err(|e| e.to_string())?;
        let images: HashSet<Diagram> = forms.iter().map(|f| delta(&nf_to_term(f))).collect();
        if images.len() != forms.len() {
            return Err(format!("n={n}: {} forms, {} images", forms.len(), images.len()));
        }
        let circle_free: HashSet<Diagram> = images.into_iter().filter(|d| d.circles() == 0).collect();
        let pairings: HashSet<Diagram> = enumerate_pairings(n).into_iter().collect();
        if circle_free != pairings {
            return Err(format!("n={n}: circle-free images differ from pairings"));
        }
        for f in &forms {
            let back = diagram_to_nf(&delta(&nf_to_term(f))).map_err(|e| e.to_string())?;
            if &back != f {
                return Err(format!("{f} -> {back}"));
            }
        }
    }
    Ok("n = 2..5, up to 2 circles".into())
}

fn remark_invariants() -> Result<String, String> {
    let mut total = 0;
    for n in 1..=6 {
        for d in enumerate_pairings(n) {
            let v = d.remark_violations();
            if !v.is_empty() {
                return Err(format!("{d}: {}", v.join("; ")));
            }
            total += 1;
        }
    }
    Ok(format!("{total} diagrams"))
}

pub fn run_all() -> Vec<Check> {
    vec![
        Check {
            name: "catalan counts",
            outcome: catalan_counts(),
        },
        Check {
            name: "parenthetical word bijection",
            outcome: parenword_bijection(),
        },
        Check {
            name: "word problem n=3 len<=6",
            outcome: word_problem(3, 6),
        },
        Check {
            name: "word problem n=4 len<=4",
            outcome: word_problem(4, 4),
        },
        Check {
            name: "peel agreement",
            outcome: peel_agreement(),
        },
        Check {
            name: "delta bijective on normal forms",
            outcome: delta_bijective(),
        },
        Check {
            name: "diagram remarks",
            outcome: remark_invariants(),
        },
    ]
}
