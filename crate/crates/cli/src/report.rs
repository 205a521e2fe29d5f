//! Deterministic key/value report rendering.
//!
//! One `key: value` line per entry, in insertion order. Exact scalars are
//! printed as rationals (`p/q`), pi-rationals with the pi power explicit,
//! or radical expressions; decimal approximations are appended as
//! `key.decimal` lines depending on the output mode.

use std::fmt::Display;

use hsc_core::verdict::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Decimal,
    Both,
}

pub struct Report {
    mode: Mode,
    precision: u32,
    lines: Vec<(String, String)>,
}

impl Report {
    pub fn new(mode: Mode, precision: u32) -> Self {
        Report {
            mode,
            precision,
            lines: Vec::new(),
        }
    }

    /// Plain entry, always printed.
    pub fn push(&mut self, key: impl Into<String>, value: impl Display) {
        self.lines.push((key.into(), value.to_string()));
    }

    /// Exact scalar entry, rendered according to the output mode.
    pub fn push_scalar(&mut self, key: impl Into<String>, value: &Scalar) {
        let key = key.into();
        if self.mode != Mode::Decimal {
            self.lines.push((key.clone(), value.to_string()));
        }
        if self.mode != Mode::Exact {
            self.lines
                .push((format!("{key}.decimal"), value.decimal(self.precision)));
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.lines {
            out.push_str(key);
            out.push_str(": ");
            out.push_str(value);
            out.push('\n');
        }
        out
    }
}
