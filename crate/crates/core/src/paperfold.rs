//! Physical simulation of folding a paper strip in half repeatedly.
//!
//! The strip is `2^n` unit cells long. Each fold lays the right half over the
//! left half, so the flipped layers end up on top in reverse order. After `n`
//! folds every layer is one cell wide, and the crease between neighbouring
//! cells is read from the relative height of their layers and from which
//! physical edge the shared boundary sits on.

use crate::error::{Error, Result};
use crate::turn::{Curve, Turn};

/// Largest supported fold count. The final stack holds `2^n` layers.
pub const MAX_FOLDS: u32 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub const fn sign(self) -> i64 {
        match self {
            Direction::Forward => 1,
            Direction::Backward => -1,
        }
    }

    pub const fn flip(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

/// One layer of the folded strip.
///
/// Physical position `x` in `[0, width)` corresponds to original strip
/// coordinate `offset + sign * x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Layer {
    pub offset: i64,
    pub direction: Direction,
}

impl Layer {
    pub const fn new(offset: i64, direction: Direction) -> Self {
        Layer { offset, direction }
    }

    /// Original cell under the physical cell `[p, p + 1)`.
    pub const fn cell_at(self, p: i64) -> i64 {
        match self.direction {
            Direction::Forward => self.offset + p,
            Direction::Backward => self.offset - p - 1,
        }
    }

    /// Physical position of original coordinate `k`.
    pub const fn physical(self, k: i64) -> i64 {
        (k - self.offset) * self.direction.sign()
    }
}

/// A stack of layers, bottom first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripStack {
    width: u64,
    length: u64,
    layers: Vec<Layer>,
}

impl StripStack {
    pub fn width(&self) -> u64 {
        self.width
    }

    /// Length of the unfolded strip.
    pub fn length(&self) -> u64 {
        self.length
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    /// Original cells bottom to top, for a fully folded (width 1) stack.
    pub fn cell_order(&self) -> Vec<i64> {
        self.layers.iter().map(|l| l.cell_at(0)).collect()
    }

    /// True when the layers cover every original cell exactly once.
    pub fn is_partition(&self) -> bool {
        let mut seen = vec![false; self.length as usize];
        for layer in &self.layers {
            for p in 0..self.width as i64 {
                let c = layer.cell_at(p);
                if c < 0 || c as u64 >= self.length || std::mem::replace(&mut seen[c as usize], true) {
                    return false;
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// An unfolded strip of `2^n` cells.
pub fn new_strip(n: u32) -> Result<StripStack> {
    if n > MAX_FOLDS {
        return Err(Error::TooManyFolds { requested: n, max: MAX_FOLDS });
    }
    let width = 1u64 << n;
    Ok(StripStack {
        width,
        length: width,
        layers: vec![Layer::new(0, Direction::Forward)],
    })
}

/// Folds the right half over the left half.
pub fn fold_once(s: &StripStack) -> Result<StripStack> {
    if s.width % 2 != 0 {
        return Err(Error::OddWidth(s.width));
    }
    let w = s.width as i64;
    let mut layers = Vec::with_capacity(s.layers.len() * 2);
    layers.extend_from_slice(&s.layers);
    layers.extend(s.layers.iter().rev().map(|l| {
        Layer::new(l.offset + l.direction.sign() * w, l.direction.flip())
    }));
    Ok(StripStack {
        width: s.width / 2,
        length: s.length,
        layers,
    })
}

/// Crease directions read along the strip after folding it in half `n` times.
pub fn creases(n: u32) -> Result<Curve> {
    let mut stack = new_strip(n)?;
    for _ in 0..n {
        stack = fold_once(&stack)?;
    }
    let len = stack.length as usize;
    // height[c] = stack position of the layer holding cell c
    let mut height = vec![0usize; len];
    for (h, layer) in stack.layers.iter().enumerate() {
        height[layer.cell_at(0) as usize] = h;
    }
    Ok((1..len)
        .map(|k| {
            let prev = stack.layers[height[k - 1]];
            let prev_below = height[k - 1] < height[k];
            let at_left_edge = prev.physical(k as i64) == 0;
            if prev_below ^ at_left_edge {
                Turn::L
            } else {
                Turn::R
            }
        })
        .collect())
}
