//! Turtle embedding of curves on the integer lattice.
//!
//! Coordinates are mathematical (y grows upward); `L` turns counterclockwise.
//! A curve with `t` turns becomes `t + 1` unit segments, so the empty curve is
//! still a single line.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::turn::Turn;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// Rotation by 90° clockwise about the origin.
    pub const fn rot_cw(self) -> Point {
        Point::new(self.y, -self.x)
    }

    pub fn add(self, other: Point) -> Point {
        Point::new(self.x + other.x, self.y + other.y)
    }

    pub fn sub(self, other: Point) -> Point {
        Point::new(self.x - other.x, self.y - other.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Heading {
    East,
    North,
    West,
    South,
}

impl Heading {
    pub const fn step(self) -> Point {
        match self {
            Heading::East => Point::new(1, 0),
            Heading::North => Point::new(0, 1),
            Heading::West => Point::new(-1, 0),
            Heading::South => Point::new(0, -1),
        }
    }

    pub const fn left(self) -> Heading {
        match self {
            Heading::East => Heading::North,
            Heading::North => Heading::West,
            Heading::West => Heading::South,
            Heading::South => Heading::East,
        }
    }

    pub const fn right(self) -> Heading {
        match self {
            Heading::East => Heading::South,
            Heading::South => Heading::West,
            Heading::West => Heading::North,
            Heading::North => Heading::East,
        }
    }

    pub const fn turn(self, t: Turn) -> Heading {
        match t {
            Turn::L => self.left(),
            Turn::R => self.right(),
        }
    }
}

/// Lattice points visited in order; consecutive points are one unit apart.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Path {
    points: Vec<Point>,
}

impl Path {
    /// Builds a path from raw points, checking the unit-step invariant.
    pub fn new(points: Vec<Point>) -> Result<Path> {
        for (index, w) in points.windows(2).enumerate() {
            let d = w[1].sub(w[0]);
            if d.x.abs() + d.y.abs() != 1 {
                return Err(Error::NotUnitStep { index, next: index + 1 });
            }
        }
        Ok(Path { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn segment_count(&self) -> usize {
        self.points.len().saturating_sub(1)
    }

    /// One `x,y` line per point.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.points.len() * 8);
        for p in &self.points {
            let _ = writeln!(out, "{},{}", p.x, p.y);
        }
        out
    }

    /// JSON array of `[x,y]` pairs.
    pub fn to_json(&self) -> String {
        let pairs: Vec<[i64; 2]> = self.points.iter().map(|p| [p.x, p.y]).collect();
        serde_json::to_string(&pairs).expect("integer pairs always serialize")
    }
}

/// Walks the curve as a turtle: one unit segment, then a turn, then the next
/// segment, and so on.
pub fn curve_to_path(xs: &[Turn], start: Point, heading: Heading) -> Path {
    let mut points = Vec::with_capacity(xs.len() + 2);
    let mut pos = start;
    let mut h = heading;
    points.push(pos);
    pos = pos.add(h.step());
    points.push(pos);
    for &t in xs {
        h = h.turn(t);
        pos = pos.add(h.step());
        points.push(pos);
    }
    Path { points }
}

/// Component-wise minimum and maximum corners.
pub fn bounding_box(p: &Path) -> Result<(Point, Point)> {
    let first = *p.points.first().ok_or(Error::EmptyPath)?;
    Ok(p.points.iter().fold((first, first), |(lo, hi), q| {
        (
            Point::new(lo.x.min(q.x), lo.y.min(q.y)),
            Point::new(hi.x.max(q.x), hi.y.max(q.y)),
        )
    }))
}

pub fn endpoint(p: &Path) -> Result<Point> {
    p.points.last().copied().ok_or(Error::EmptyPath)
}

/// True when no unit segment is traversed twice in either direction.
pub fn distinct_undirected_edges(p: &Path) -> bool {
    let mut seen = HashSet::with_capacity(p.segment_count());
    p.points.windows(2).all(|w| {
        let edge = if w[0] <= w[1] { (w[0], w[1]) } else { (w[1], w[0]) };
        seen.insert(edge)
    })
}
