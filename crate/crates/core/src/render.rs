//! Drawings of diagrams in normal form: straight transversal threads,
//! semicircular cups and caps, circles stacked in the left margin.

use std::fmt::Write as _;

use crate::diagram::{Diagram, ThreadClass};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Format {
    #[default]
    Svg,
    Ascii,
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct RenderOptions {
    pub format: Format,
    /// Pixels per coordinate step; must be positive.
    pub unit: f64,
    pub show_labels: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            format: Format::Svg,
            unit: 40.0,
            show_labels: false,
        }
    }
}

/// Height of the canvas for n-diagrams: `max(5, (n-1)(n-2)/2)`.
pub fn canvas_height(n: usize) -> usize {
    5.max(n.saturating_sub(1) * n.saturating_sub(2) / 2)
}

pub fn render(d: &Diagram, opts: &RenderOptions) -> String {
    match opts.format {
        Format::Svg => render_svg(d, opts),
        Format::Ascii => render_ascii(d),
    }
}

fn pos(code: i32) -> f64 {
    code.unsigned_abs() as f64
}

fn render_svg(d: &Diagram, opts: &RenderOptions) -> String {
    let u = if opts.unit > 0.0 { opts.unit } else { 1.0 };
    let n = d.n();
    let width = (n + 1) as f64 * u;
    let height = canvas_height(n) as f64 * u;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        s,
        r##"  <path class="frame" d="M 0 0 L {width} 0 L {width} {height} L 0 {height} Z" fill="none" stroke="#999" stroke-width="0.5"/>"##
    );
    for t in d.threads() {
        match t.class() {
            ThreadClass::Transversal { .. } => {
                // hi is the top end, lo the bottom end
                let _ = writeln!(
                    s,
                    r#"  <line x1="{}" y1="0" x2="{}" y2="{height}" stroke="black" stroke-width="2"/>"#,
                    pos(t.hi) * u,
                    pos(t.lo) * u,
                );
            }
            class => {
                let (a, b) = t.positions();
                let (x1, x2) = (a as f64 * u, b as f64 * u);
                let r = (x2 - x1) / 2.0;
                // cups hang down from the top edge, caps rise from the bottom
                let (y, sweep) = if class == ThreadClass::Cup {
                    (0.0, 0)
                } else {
                    (height, 1)
                };
                let _ = writeln!(
                    s,
                    r#"  <path class="arc" d="M {x1} {y} A {r} {r} 0 0 {sweep} {x2} {y}" fill="none" stroke="black" stroke-width="2"/>"#
                );
            }
        }
    }
    let l = d.circles();
    if l > 0 {
        let step = height / (l + 1) as f64;
        let r = (0.25 * u).min(0.4 * step);
        for k in 1..=l {
            let _ = writeln!(
                s,
                r#"  <circle cx="{}" cy="{}" r="{r}" fill="none" stroke="black" stroke-width="2"/>"#,
                0.5 * u,
                k as f64 * step
            );
        }
    }
    if opts.show_labels {
        for i in 1..=n {
            let x = i as f64 * u;
            let _ = writeln!(
                s,
                r#"  <text x="{x}" y="{}" font-size="{}" text-anchor="middle">{i}</text>"#,
                height - 0.1 * u,
                0.3 * u
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

fn render_ascii(d: &Diagram) -> String {
    const STEP: usize = 4;
    let n = d.n();
    let max_span = |class| {
        d.threads()
            .filter(|t| t.class() == class)
            .map(|t| t.span())
            .max()
            .unwrap_or(0)
    };
    let (cup_depth, cap_depth) = (max_span(ThreadClass::Cup), max_span(ThreadClass::Cap));
    let rows = (cup_depth + cap_depth + 3).max(5).max(2 * d.circles() + 1);
    let cols = (n + 1) * STEP + 1;
    let mut grid = vec![vec![' '; cols]; rows];
    let col = |code: i32| code.unsigned_abs() as usize * STEP;
    for t in d.threads() {
        match t.class() {
            ThreadClass::Transversal { .. } => {
                let (top, bottom) = (col(t.hi) as f64, col(t.lo) as f64);
                let glyph = if top == bottom {
                    '|'
                } else if bottom > top {
                    '\\'
                } else {
                    '/'
                };
                for (r, row) in grid.iter_mut().enumerate() {
                    let x = top + (bottom - top) * r as f64 / (rows - 1) as f64;
                    row[x.round() as usize] = glyph;
                }
            }
            class => {
                let (a, b) = t.positions();
                let (x1, x2) = (a * STEP, b * STEP);
                let depth = t.span();
                if class == ThreadClass::Cup {
                    for row in grid.iter_mut().take(depth) {
                        row[x1] = '|';
                        row[x2] = '|';
                    }
                    grid[depth][x1] = '\\';
                    grid[depth][x2] = '/';
                    for c in &mut grid[depth][x1 + 1..x2] {
                        *c = '_';
                    }
                } else {
                    let top = rows - 1 - depth;
                    for c in &mut grid[top - 1][x1 + 1..x2] {
                        *c = '_';
                    }
                    for row in grid.iter_mut().skip(top) {
                        row[x1] = '|';
                        row[x2] = '|';
                    }
                    grid[top][x1] = '/';
                    grid[top][x2] = '\\';
                }
            }
        }
    }
    for k in 0..d.circles() {
        grid[2 * k + 1][1] = 'o';
    }
    let mut out = String::new();
    for row in grid {
        out.push_str(row.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    out
}
