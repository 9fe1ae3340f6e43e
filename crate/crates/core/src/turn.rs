//! Turns, curves, alternating streams and the interleave operator.
//!
//! A [`Curve`] is a finite sequence of turns read along the curve. The folding
//! construction inserts the elements of an [`AlternatingStream`] between (and
//! around) the turns of a curve with [`interleave`]: stream elements land on
//! even positions, curve elements on odd positions, and the result always ends
//! with one extra stream element.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single crease direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Turn {
    /// Left, anticlockwise.
    L,
    /// Right, clockwise.
    R,
}

impl Turn {
    pub const ALL: [Turn; 2] = [Turn::L, Turn::R];

    /// The opposite turn.
    #[inline]
    pub const fn inv(self) -> Turn {
        match self {
            Turn::L => Turn::R,
            Turn::R => Turn::L,
        }
    }

    pub const fn as_char(self) -> char {
        match self {
            Turn::L => 'L',
            Turn::R => 'R',
        }
    }

    pub fn from_char(c: char) -> Option<Turn> {
        match c {
            'L' => Some(Turn::L),
            'R' => Some(Turn::R),
            _ => None,
        }
    }
}

impl fmt::Display for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Free-function form of [`Turn::inv`].
#[inline]
pub const fn inv(t: Turn) -> Turn {
    t.inv()
}

/// A finite, ordered sequence of turns.
///
/// Text form is one `L`/`R` character per turn with no separators. Parsing
/// tolerates a single trailing line terminator so files written with
/// [`Curve::to_line`] read back unchanged.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Curve(Vec<Turn>);

impl Curve {
    pub fn new() -> Self {
        Curve(Vec::new())
    }

    pub fn with_capacity(n: usize) -> Self {
        Curve(Vec::with_capacity(n))
    }

    pub fn as_slice(&self) -> &[Turn] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Turn> {
        self.0
    }

    pub fn push(&mut self, t: Turn) {
        self.0.push(t);
    }

    pub fn truncate(&mut self, len: usize) {
        self.0.truncate(len);
    }

    pub(crate) fn vec_mut(&mut self) -> &mut Vec<Turn> {
        &mut self.0
    }

    /// Text encoding followed by a newline, as written to turns files.
    pub fn to_line(&self) -> String {
        let mut s = self.to_string();
        s.push('\n');
        s
    }

    /// Element-wise inversion.
    pub fn map_inv(&self) -> Curve {
        curve_map_inv(&self.0)
    }

    pub fn reversed(&self) -> Curve {
        curve_reverse(&self.0)
    }
}

impl Deref for Curve {
    type Target = [Turn];

    fn deref(&self) -> &[Turn] {
        &self.0
    }
}

impl From<Vec<Turn>> for Curve {
    fn from(v: Vec<Turn>) -> Self {
        Curve(v)
    }
}

impl From<&[Turn]> for Curve {
    fn from(v: &[Turn]) -> Self {
        Curve(v.to_vec())
    }
}

impl FromIterator<Turn> for Curve {
    fn from_iter<I: IntoIterator<Item = Turn>>(iter: I) -> Self {
        Curve(iter.into_iter().collect())
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|t| t.as_char()).collect();
        f.write_str(&s)
    }
}

impl FromStr for Curve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Curve> {
        let body = strip_line_end(s);
        body.chars()
            .enumerate()
            .map(|(position, c)| {
                Turn::from_char(c).ok_or(Error::InvalidChar {
                    what: "turn",
                    position,
                    found: c,
                })
            })
            .collect()
    }
}

pub(crate) fn strip_line_end(s: &str) -> &str {
    s.strip_suffix("\r\n")
        .or_else(|| s.strip_suffix('\n'))
        .unwrap_or(s)
}

/// An infinite stream alternating between two turns.
///
/// Only the head is stored: the element at 0-based index `i` is the head when
/// `i` is even and its inversion when `i` is odd. `lr` and `rl` are the two
/// inhabitants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlternatingStream {
    head: Turn,
}

impl AlternatingStream {
    pub const fn starting_with(head: Turn) -> Self {
        AlternatingStream { head }
    }

    /// `L, R, L, R, ...`
    pub const fn lr() -> Self {
        Self::starting_with(Turn::L)
    }

    /// `R, L, R, L, ...`
    pub const fn rl() -> Self {
        Self::starting_with(Turn::R)
    }

    pub const fn head(self) -> Turn {
        self.head
    }

    pub const fn tail(self) -> Self {
        Self::starting_with(self.head.inv())
    }

    /// Element-wise inversion. For an alternating stream this is the same
    /// stream as [`tail`](Self::tail).
    pub const fn map_inv(self) -> Self {
        Self::starting_with(self.head.inv())
    }

    #[inline]
    pub const fn element(self, i: usize) -> Turn {
        if i % 2 == 0 {
            self.head
        } else {
            self.head.inv()
        }
    }

    /// The first `n` elements.
    pub fn take(self, n: usize) -> Curve {
        (0..n).map(|i| self.element(i)).collect()
    }
}

impl fmt::Display for AlternatingStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.head {
            Turn::L => f.write_str("lr"),
            Turn::R => f.write_str("rl"),
        }
    }
}

pub fn stream_lr() -> AlternatingStream {
    AlternatingStream::lr()
}

pub fn stream_tail(s: AlternatingStream) -> AlternatingStream {
    s.tail()
}

pub fn stream_map_inv(s: AlternatingStream) -> AlternatingStream {
    s.map_inv()
}

/// Interleaves `s` into `xs`: `[s0, xs0, s1, xs1, ..., s(n-1), xs(n-1), sn]`.
///
/// The result always has `2 * xs.len() + 1` turns.
pub fn interleave(s: AlternatingStream, xs: &[Turn]) -> Curve {
    let mut out = Vec::with_capacity(2 * xs.len() + 1);
    for (i, &x) in xs.iter().enumerate() {
        out.push(s.element(i));
        out.push(x);
    }
    out.push(s.element(xs.len()));
    Curve(out)
}

pub fn curve_map_inv(xs: &[Turn]) -> Curve {
    xs.iter().map(|t| t.inv()).collect()
}

pub fn curve_reverse(xs: &[Turn]) -> Curve {
    xs.iter().rev().copied().collect()
}
