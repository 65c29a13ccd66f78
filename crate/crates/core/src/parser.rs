//! Textual syntax for terms.
//!
//! ```text
//! term   := factor*
//! factor := "1" | "c" ("^" nat)? | "h" nat | "h[" nat "," nat "]"
//! ```
//!
//! Factors are separated by whitespace and optionally by `*`. `h3` is the
//! diapsis `h^3` and `h[3,1]` is the block `h^3 h^2 h^1`, upper index first.

use std::fmt;

use crate::error::{Error, ParseError, Result};
use crate::term::{check_block, check_size, Generator, Term};

struct Cursor<'a> {
    chars: &'a [char],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(ch) if ch == want => {
                self.pos += 1;
                Ok(())
            }
            Some(ch) => Err(ParseError::new(
                self.pos,
                format!("expected '{want}', found '{ch}'"),
            )),
            None => Err(ParseError::new(
                self.pos,
                format!("expected '{want}', found end of input"),
            )),
        }
    }

    fn nat(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.peek() {
                Some(ch) => ParseError::new(start, format!("expected a number, found '{ch}'")),
                None => ParseError::new(start, "expected a number, found end of input"),
            });
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .map_err(|_| ParseError::new(start, format!("number {digits} is too large")))
    }
}

/// Parses `input` as a term of `K_n`.
pub fn parse(input: &str, n: usize) -> Result<Term> {
    check_size(n)?;
    let chars: Vec<char> = input.chars().collect();
    let mut cur = Cursor {
        chars: &chars,
        pos: 0,
    };
    let mut word = Vec::new();
    let mut have_factor = false;
    let mut expect_factor = false;
    loop {
        cur.skip_ws();
        let start = cur.pos;
        let Some(ch) = cur.peek() else {
            if expect_factor {
                return Err(ParseError::new(start, "expected a factor after '*'").into());
            }
            break;
        };
        match ch {
            '*' => {
                if !have_factor || expect_factor {
                    return Err(ParseError::new(start, "unexpected '*'").into());
                }
                cur.pos += 1;
                expect_factor = true;
                continue;
            }
            '1' => {
                cur.pos += 1;
                if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
                    return Err(ParseError::new(start, "unit '1' must stand alone").into());
                }
            }
            'c' => {
                cur.pos += 1;
                let mut count = 1;
                if cur.peek() == Some('^') {
                    cur.pos += 1;
                    count = cur.nat()?;
                }
                word.extend(std::iter::repeat_n(Generator::Circle, count));
            }
            'h' => {
                cur.pos += 1;
                if cur.peek() == Some('[') {
                    cur.pos += 1;
                    cur.skip_ws();
                    let upper = cur.nat()?;
                    cur.skip_ws();
                    cur.expect(',')?;
                    cur.skip_ws();
                    let lower = cur.nat()?;
                    cur.skip_ws();
                    cur.expect(']')?;
                    check_block(n, upper, lower).map_err(|source| Error::DomainAt {
                        position: start,
                        source,
                    })?;
                    word.push(Generator::Block { upper, lower });
                } else {
                    let index = cur.nat()?;
                    check_block(n, index, index).map_err(|source| Error::DomainAt {
                        position: start,
                        source,
                    })?;
                    word.push(Generator::diapsis(index));
                }
            }
            other => {
                return Err(ParseError::new(start, format!("unexpected character '{other}'")).into());
            }
        }
        have_factor = true;
        expect_factor = false;
    }
    Ok(Term::from_parts(n, word))
}

/// Canonical rendering: `1` for the unit, `c^l` for runs of two or more
/// circles, `hi` for singular blocks and `h[b,a]` otherwise.
pub fn print(t: &Term) -> String {
    t.to_string()
}

/// Prints a bare word in the same canonical syntax as [`print`].
pub fn print_word(word: &[Generator]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < word.len() {
        match word[i] {
            Generator::Circle => {
                let run = word[i..]
                    .iter()
                    .take_while(|g| **g == Generator::Circle)
                    .count();
                out.push(if run == 1 {
                    "c".to_string()
                } else {
                    format!("c^{run}")
                });
                i += run;
                continue;
            }
            Generator::Block { upper, lower } if upper == lower => out.push(format!("h{upper}")),
            Generator::Block { upper, lower } => out.push(format!("h[{upper},{lower}]")),
        }
        i += 1;
    }
    out.join(" ")
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_word(self.word()))
    }
}
