//! Rank-2 sublattices of ℤ² and their fundamental-domain arithmetic.

use super::Cell;
use crate::errors::{Error, Result};

/// A rank-2 subgroup of ℤ² spanned by two basis vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lattice2 {
    pub u: Cell,
    pub w: Cell,
}

/// Hermite-normal-form view of a lattice: basis `(alpha, 0)`, `(beta, gamma)`
/// with `alpha > 0`, `gamma > 0`, `0 <= beta < alpha`. The rectangle
/// `[0, alpha) x [0, gamma)` is a fundamental domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hnf {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
}

fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, x, y) = egcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

impl Lattice2 {
    pub fn new(u: Cell, w: Cell) -> Result<Self> {
        let l = Lattice2 { u, w };
        if l.det() == 0 {
            return Err(Error::BadGrid(format!(
                "lattice basis {u} {w} is degenerate"
            )));
        }
        Ok(l)
    }

    pub fn det(&self) -> i64 {
        self.u.x * self.w.y - self.u.y * self.w.x
    }

    /// Number of cosets of the lattice in ℤ².
    pub fn index(&self) -> i64 {
        self.det().abs()
    }

    /// Membership test: does an integer combination of the basis equal `v`?
    pub fn contains(&self, v: Cell) -> bool {
        let d = self.det();
        let a_num = v.x * self.w.y - v.y * self.w.x;
        let b_num = self.u.x * v.y - self.u.y * v.x;
        a_num % d == 0 && b_num % d == 0
    }

    /// Smallest `k > 0` with `(k, 0)` in the lattice.
    pub fn horizontal_period(&self) -> i64 {
        let g = gcd(self.u.y, self.w.y);
        // g divides det for any lattice with det != 0; when both y-components
        // are zero the basis is degenerate and new() rejects it.
        self.index() / g
    }

    /// Smallest nonnegative residue class structure: for a row `r`, returns
    /// the unique `x0` in `[0, horizontal_period())` such that lattice points
    /// on row `r` are exactly `(x0 + k*W, r)`, or `None` when the lattice has
    /// no point on row `r`.
    pub fn column_residue_for_row(&self, r: i64) -> Option<i64> {
        let g = gcd(self.u.y, self.w.y);
        debug_assert!(g > 0, "degenerate lattice rejected at construction");
        if r.rem_euclid(g) != 0 {
            return None;
        }
        let (_, a, b) = egcd(self.u.y, self.w.y);
        // a*u.y + b*w.y = g; scale to reach row r
        let t = r / g;
        let x = (a as i128 * t as i128 * self.u.x as i128
            + b as i128 * t as i128 * self.w.x as i128)
            .rem_euclid(self.horizontal_period() as i128);
        Some(x as i64)
    }

    pub fn hnf(&self) -> Hnf {
        let g = gcd(self.u.y, self.w.y);
        if g == 0 {
            unreachable!("degenerate lattice rejected at construction");
        }
        let (_, a, b) = egcd(self.u.y, self.w.y);
        let wx = a * self.u.x + b * self.w.x;
        let alpha = self.index() / g;
        Hnf {
            alpha,
            beta: wx.rem_euclid(alpha),
            gamma: g,
        }
    }

    /// Reduces a cell into the HNF fundamental domain.
    pub fn reduce(&self, c: Cell) -> Cell {
        let h = self.hnf();
        h.reduce(c)
    }
}

impl Hnf {
    pub fn index(&self) -> i64 {
        self.alpha * self.gamma
    }

    pub fn reduce(&self, c: Cell) -> Cell {
        let k = c.y.div_euclid(self.gamma);
        let x = c.x - k * self.beta;
        Cell::new(x.rem_euclid(self.alpha), c.y.rem_euclid(self.gamma))
    }

    /// Cells of the fundamental domain in row-major order.
    pub fn domain(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.gamma).flat_map(move |y| (0..self.alpha).map(move |x| Cell::new(x, y)))
    }

    /// Dense row-major index of a domain cell after reduction.
    pub fn position(&self, c: Cell) -> usize {
        let r = self.reduce(c);
        (r.y * self.alpha + r.x) as usize
    }
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}
