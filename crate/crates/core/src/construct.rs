//! The unfolding and folding constructions over instruction lists, and the
//! infinite dragon stream.
//!
//! `dragon_unfold` is a right fold of [`unfold_step`] and `dragon_fold` a left
//! fold of [`fold_step`], both seeded with the empty curve. The last
//! instruction is the innermost unfold, while the first instruction is the
//! innermost fold.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::turn::{interleave, strip_line_end, AlternatingStream, Curve, Turn};

/// Which way to rotate (unfold) or fold at one construction step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rot {
    /// Clockwise.
    C,
    /// Anticlockwise.
    A,
}

impl Rot {
    pub const ALL: [Rot; 2] = [Rot::C, Rot::A];

    /// Turn inserted between a curve and its rotated copy.
    pub const fn pivot(self) -> Turn {
        match self {
            Rot::C => Turn::L,
            Rot::A => Turn::R,
        }
    }

    /// Stream interleaved into a curve when folding.
    pub const fn stream(self) -> AlternatingStream {
        match self {
            Rot::C => AlternatingStream::lr(),
            Rot::A => AlternatingStream::rl(),
        }
    }

    pub const fn as_char(self) -> char {
        match self {
            Rot::C => 'C',
            Rot::A => 'A',
        }
    }

    pub fn from_char(c: char) -> Option<Rot> {
        match c {
            'C' | 'c' => Some(Rot::C),
            'A' | 'a' => Some(Rot::A),
            _ => None,
        }
    }
}

impl fmt::Display for Rot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite list of rotation instructions, e.g. `"ACAACAAACCCC"`.
///
/// Parsed case-insensitively, displayed uppercase.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Instructions(Vec<Rot>);

impl Instructions {
    pub fn new(rots: Vec<Rot>) -> Self {
        Instructions(rots)
    }

    pub fn as_slice(&self) -> &[Rot] {
        &self.0
    }
}

impl Deref for Instructions {
    type Target = [Rot];

    fn deref(&self) -> &[Rot] {
        &self.0
    }
}

impl From<Vec<Rot>> for Instructions {
    fn from(v: Vec<Rot>) -> Self {
        Instructions(v)
    }
}

impl FromIterator<Rot> for Instructions {
    fn from_iter<I: IntoIterator<Item = Rot>>(iter: I) -> Self {
        Instructions(iter.into_iter().collect())
    }
}

impl fmt::Display for Instructions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|r| r.as_char()).collect();
        f.write_str(&s)
    }
}

impl FromStr for Instructions {
    type Err = Error;

    fn from_str(s: &str) -> Result<Instructions> {
        strip_line_end(s)
            .chars()
            .enumerate()
            .map(|(position, c)| {
                Rot::from_char(c).ok_or(Error::InvalidChar {
                    what: "instruction",
                    position,
                    found: c,
                })
            })
            .collect()
    }
}

/// `ts ++ [pivot] ++ map inv (reverse ts)`.
pub fn unfold_step(r: Rot, ts: &[Turn]) -> Curve {
    let mut out = Curve::with_capacity(2 * ts.len() + 1);
    out.vec_mut().extend_from_slice(ts);
    unfold_in_place(r, out.vec_mut());
    out
}

fn unfold_in_place(r: Rot, buf: &mut Vec<Turn>) {
    let n = buf.len();
    buf.reserve(n + 1);
    buf.push(r.pivot());
    for i in (0..n).rev() {
        let t = buf[i].inv();
        buf.push(t);
    }
}

/// Interleaves `lr` (for `C`) or `rl` (for `A`) into `ts`.
pub fn fold_step(ts: &[Turn], r: Rot) -> Curve {
    interleave(r.stream(), ts)
}

/// Right fold of [`unfold_step`] over `rs`, starting from the empty curve.
pub fn dragon_unfold(rs: &[Rot]) -> Curve {
    let mut buf = Vec::with_capacity(curve_len(rs.len()));
    for &r in rs.iter().rev() {
        unfold_in_place(r, &mut buf);
    }
    Curve::from(buf)
}

/// Left fold of [`fold_step`] over `rs`, starting from the empty curve.
pub fn dragon_fold(rs: &[Rot]) -> Curve {
    rs.iter()
        .fold(Curve::new(), |ts, &r| fold_step(&ts, r))
}

/// `n` copies of `C`: the classic dragon of order `n`.
pub fn classic_instructions(n: usize) -> Instructions {
    Instructions(vec![Rot::C; n])
}

/// `2^n - 1`, saturating.
pub fn curve_len(n: usize) -> usize {
    u32::try_from(n)
        .ok()
        .and_then(|n| 1usize.checked_shl(n))
        .map_or(usize::MAX, |p| p - 1)
}

/// First `m` turns of the infinite dragon stream `dragon = lr ▷ dragon`.
///
/// Computed as a prefix of the classic folded curve of the least order long
/// enough to contain `m` turns.
pub fn stream_prefix(m: usize) -> Curve {
    let mut k = 0;
    while curve_len(k) < m {
        k += 1;
    }
    let mut curve = dragon_fold(&classic_instructions(k));
    curve.truncate(m);
    curve
}

/// Turn at 1-based position `i` of the infinite dragon stream.
///
/// Even positions of the stream repeat the stream itself and odd positions
/// enumerate `lr`, so strip factors of two and read the parity of the odd part.
pub fn stream_turn_at(i: u64) -> Result<Turn> {
    if i == 0 {
        return Err(Error::ZeroIndex);
    }
    let odd = i >> i.trailing_zeros();
    Ok(if odd % 4 == 1 { Turn::L } else { Turn::R })
}
