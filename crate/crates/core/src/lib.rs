//! Kauffman monoids `K_n`: terms over diapsides `h^i` and the circle `c`,
//! rewriting to Jones normal form, the planar diagram model, and a decision
//! procedure for equality of terms.
//!
//! ```
//! use kauffman::{decide_equal, parse};
//!
//! let t = parse("h2 h1 h2", 3).unwrap();
//! let u = parse("h2", 3).unwrap();
//! assert!(decide_equal(&t, &u).unwrap().equal);
//! ```

pub mod cli;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod parser;
pub mod render;
pub mod rewrite;
pub mod selftest;
pub mod semantics;
pub mod term;

pub use diagram::{compose, covers, equivalent, Diagram, DiagramJson, Thread, ThreadClass};
pub use enumerate::{
    enumerate_normal_forms, enumerate_pairings, enumerate_terms, pairing_to_parenword,
    parenword_to_pairing, Paren, ParenWord,
};
pub use error::{DomainError, Error, ParseError, Result};
pub use parser::{parse, print};
pub use render::{canvas_height, render, Format, RenderOptions};
pub use rewrite::{
    apply_rule, find_redex, find_redex_with, normal_form, normalize, normalize_with,
    NormalizationTrace, RewriteStep, Rule, Strategy,
};
pub use semantics::{
    decide_equal, decide_equal_checked, delta, delta_block, diagram_to_nf, peel, peel_traced,
    EqualityVerdict, PeelStep,
};
pub use term::{expand, make_block, measure, nf_to_term, Generator, JonesNF, Measure, Term};
