//! Gridlike graphs: ℤ² vertex sets with a free lattice action, finitely many
//! vertex orbits, and a translation-equivariant adjacency rule.

mod lattice;

pub use lattice::{Hnf, Lattice2};

use crate::errors::{Error, Result};
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, RwLock};

/// A vertex of the ℤ² encoding of a gridlike graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub x: i64,
    pub y: i64,
}

impl Cell {
    pub const fn new(x: i64, y: i64) -> Self {
        Cell { x, y }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl std::ops::Add for Cell {
    type Output = Cell;
    fn add(self, rhs: Cell) -> Cell {
        Cell::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl std::ops::Sub for Cell {
    type Output = Cell;
    fn sub(self, rhs: Cell) -> Cell {
        Cell::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl std::ops::Neg for Cell {
    type Output = Cell;
    fn neg(self) -> Cell {
        Cell::new(-self.x, -self.y)
    }
}

/// Ceiling of `a / b` for `b > 0`, exact for negative `a`.
pub fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

/// A period vector normalized for the strip construction: `y > 0`, member of
/// the grid's translation lattice, and `x >= 0` whenever the grid carries a
/// horizontal mirror symmetry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodVector {
    pub x: i64,
    pub y: i64,
    /// True when the requested period had `x < 0` and the grid instance was
    /// reflected to flip its sign; emitted codes are mapped back.
    pub reflected: bool,
}

impl PeriodVector {
    pub fn as_cell(&self) -> Cell {
        Cell::new(self.x, self.y)
    }

    /// The period as originally requested, before any reflection.
    pub fn original(&self) -> Cell {
        if self.reflected {
            Cell::new(-self.x, self.y)
        } else {
            Cell::new(self.x, self.y)
        }
    }
}

/// A gridlike graph on ℤ²: translation lattice `T`, coset representatives
/// `D`, and per-coset neighbor offsets. Immutable after construction; ball
/// stencils are memoized per (coset, radius).
pub struct GridModel {
    name: String,
    lattice: Lattice2,
    cosets: Vec<Cell>,
    /// Neighbor offsets per coset representative: `neighbors(D[i] + t) =
    /// D[i] + t + offsets[i]` for `t` in `T`.
    offsets: Vec<Vec<Cell>>,
    /// Smallest `k > 0` with `(k, 0)` in `T`; the strip step width.
    step_width: i64,
    /// Whether `x -> -x` is an automorphism of this grid.
    mirror_x: bool,
    coset_of_domain: HashMap<Cell, usize>,
    stencils: RwLock<HashMap<(usize, u32), Arc<Vec<Cell>>>>,
}

impl fmt::Debug for GridModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GridModel")
            .field("name", &self.name)
            .field("lattice", &self.lattice)
            .field("cosets", &self.cosets)
            .field("step_width", &self.step_width)
            .finish()
    }
}

impl GridModel {
    pub fn new(
        name: impl Into<String>,
        lattice: Lattice2,
        cosets: Vec<Cell>,
        offsets: Vec<Vec<Cell>>,
        mirror_x: bool,
    ) -> Result<Self> {
        let name = name.into();
        if cosets.is_empty() || cosets.len() != offsets.len() {
            return Err(Error::BadGrid(
                "coset list and offset table must be nonempty and aligned".into(),
            ));
        }
        if cosets.len() as i64 != lattice.index() {
            return Err(Error::BadGrid(format!(
                "{} coset representatives for a lattice of index {}",
                cosets.len(),
                lattice.index()
            )));
        }
        let hnf = lattice.hnf();
        let mut coset_of_domain = HashMap::new();
        for (i, &d) in cosets.iter().enumerate() {
            if coset_of_domain.insert(hnf.reduce(d), i).is_some() {
                return Err(Error::BadGrid(format!(
                    "coset representatives {d} collide modulo the lattice"
                )));
            }
        }
        let grid = GridModel {
            name,
            lattice,
            cosets,
            offsets,
            step_width: lattice.horizontal_period(),
            mirror_x,
            coset_of_domain,
            stencils: RwLock::new(HashMap::new()),
        };
        grid.validate_adjacency()?;
        Ok(grid)
    }

    /// Adjacency must be irreflexive and symmetric; equivariance is
    /// structural (offsets are per coset).
    fn validate_adjacency(&self) -> Result<()> {
        for (i, offs) in self.offsets.iter().enumerate() {
            let d = self.cosets[i];
            let mut seen = HashSet::new();
            for &o in offs {
                if o == Cell::new(0, 0) {
                    return Err(Error::BadGrid(format!("coset {d} has a self-loop offset")));
                }
                if !seen.insert(o) {
                    return Err(Error::BadGrid(format!(
                        "coset {d} repeats neighbor offset {o}"
                    )));
                }
                let n = d + o;
                let back = self.offsets[self.coset_index(n)]
                    .iter()
                    .any(|&b| n + b == d);
                if !back {
                    return Err(Error::BadGrid(format!(
                        "adjacency not symmetric: {d} -> {n} has no reverse edge"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn lattice(&self) -> Lattice2 {
        self.lattice
    }

    pub fn cosets(&self) -> &[Cell] {
        &self.cosets
    }

    pub fn step_width(&self) -> i64 {
        self.step_width
    }

    pub fn mirror_x(&self) -> bool {
        self.mirror_x
    }

    pub fn coset_index(&self, c: Cell) -> usize {
        self.coset_of_domain[&self.lattice.hnf().reduce(c)]
    }

    /// The coset representative of the orbit of `c`.
    pub fn coset_representative(&self, c: Cell) -> Cell {
        self.cosets[self.coset_index(c)]
    }

    pub fn neighbors(&self, c: Cell) -> Vec<Cell> {
        self.offsets[self.coset_index(c)]
            .iter()
            .map(|&o| c + o)
            .collect()
    }

    /// Closed ball of radius `r` around `c` in the path metric, via
    /// breadth-first expansion. Memoized per (coset, r) as a stencil.
    pub fn ball(&self, c: Cell, r: u32) -> Vec<Cell> {
        let idx = self.coset_index(c);
        let rep = self.cosets[idx];
        let stencil = self.ball_stencil(idx, r);
        let shift = c - rep;
        stencil.iter().map(|&s| s + shift).collect()
    }

    fn ball_stencil(&self, coset: usize, r: u32) -> Arc<Vec<Cell>> {
        if let Some(s) = self.stencils.read().unwrap().get(&(coset, r)) {
            return s.clone();
        }
        let rep = self.cosets[coset];
        let mut dist: HashMap<Cell, u32> = HashMap::new();
        let mut queue = VecDeque::new();
        dist.insert(rep, 0);
        queue.push_back(rep);
        while let Some(u) = queue.pop_front() {
            let du = dist[&u];
            if du == r {
                continue;
            }
            for n in self.neighbors(u) {
                if !dist.contains_key(&n) {
                    dist.insert(n, du + 1);
                    queue.push_back(n);
                }
            }
        }
        let mut cells: Vec<Cell> = dist.into_keys().collect();
        cells.sort();
        let arc = Arc::new(cells);
        self.stencils
            .write()
            .unwrap()
            .insert((coset, r), arc.clone());
        arc
    }

    /// Normalizes a raw period vector: flips sign so `y > 0`, then applies
    /// the horizontal mirror when `x < 0` and the grid supports it. Grids
    /// without the mirror keep negative `x`; the strip construction is
    /// sign-agnostic there.
    pub fn normalize_period(&self, raw: Cell) -> Result<PeriodVector> {
        let v = if raw.y < 0 || (raw.y == 0 && raw.x < 0) {
            -raw
        } else {
            raw
        };
        if v.y == 0 {
            return Err(Error::DegeneratePeriod(raw.x, raw.y));
        }
        if !self.lattice.contains(v) {
            return Err(Error::NotInLattice(raw.x, raw.y, self.name.clone()));
        }
        if v.x < 0 && self.mirror_x {
            Ok(PeriodVector {
                x: -v.x,
                y: v.y,
                reflected: true,
            })
        } else {
            Ok(PeriodVector {
                x: v.x,
                y: v.y,
                reflected: false,
            })
        }
    }

    /// Reflects a cell through the grid's horizontal mirror `x -> -x`.
    pub fn reflect_cell(&self, c: Cell) -> Cell {
        Cell::new(-c.x, c.y)
    }
}

/// Canonical representative of `c` modulo the single period `v`: the unique
/// `c + k*v` whose row lies in `[0, v.y)`.
pub fn reduce_mod_period(v: PeriodVector, c: Cell) -> Cell {
    let k = c.y.div_euclid(v.y);
    Cell::new(c.x - k * v.x, c.y - k * v.y)
}

/// Built-in grid presets.
pub mod presets {
    use super::*;

    /// Names accepted by [`by_name`].
    pub const NAMES: [&str; 4] = ["hex", "square", "king", "triangular"];

    pub fn by_name(name: &str) -> Result<GridModel> {
        match name {
            "hex" => hex(),
            "square" => square(),
            "king" => king(),
            "triangular" => triangular(),
            other => Err(Error::BadGrid(format!(
                "unknown grid '{other}' (expected one of {NAMES:?} or a grid file)"
            ))),
        }
    }

    /// Brick-wall encoding of the hexagonal grid: all horizontal edges, and a
    /// vertical edge from (x, y) to (x, y+1) exactly when x+y is even.
    pub fn hex() -> Result<GridModel> {
        GridModel::new(
            "hex",
            Lattice2::new(Cell::new(0, 2), Cell::new(1, 1))?,
            vec![Cell::new(0, 0), Cell::new(1, 0)],
            vec![
                // even coset: vertical edge goes up
                vec![Cell::new(1, 0), Cell::new(-1, 0), Cell::new(0, 1)],
                // odd coset: vertical edge goes down
                vec![Cell::new(1, 0), Cell::new(-1, 0), Cell::new(0, -1)],
            ],
            true,
        )
    }

    pub fn square() -> Result<GridModel> {
        GridModel::new(
            "square",
            Lattice2::new(Cell::new(1, 0), Cell::new(0, 1))?,
            vec![Cell::new(0, 0)],
            vec![vec![
                Cell::new(1, 0),
                Cell::new(-1, 0),
                Cell::new(0, 1),
                Cell::new(0, -1),
            ]],
            true,
        )
    }

    pub fn king() -> Result<GridModel> {
        let mut offs = Vec::new();
        for dx in -1..=1 {
            for dy in -1..=1 {
                if (dx, dy) != (0, 0) {
                    offs.push(Cell::new(dx, dy));
                }
            }
        }
        GridModel::new(
            "king",
            Lattice2::new(Cell::new(1, 0), Cell::new(0, 1))?,
            vec![Cell::new(0, 0)],
            vec![offs],
            true,
        )
    }

    /// Triangular grid on the standard skew embedding with neighbors
    /// ±(1,0), ±(0,1), ±(1,1). `x -> -x` maps it to the opposite chirality,
    /// so it carries no horizontal mirror here.
    pub fn triangular() -> Result<GridModel> {
        GridModel::new(
            "triangular",
            Lattice2::new(Cell::new(1, 0), Cell::new(0, 1))?,
            vec![Cell::new(0, 0)],
            vec![vec![
                Cell::new(1, 0),
                Cell::new(-1, 0),
                Cell::new(0, 1),
                Cell::new(0, -1),
                Cell::new(1, 1),
                Cell::new(-1, -1),
            ]],
            false,
        )
    }
}

/// Parses the declarative grid format:
///
/// ```text
/// name mygrid
/// lattice 0,2 1,1
/// cosets 0,0 1,0
/// neighbors 0,0: 1,0 -1,0 0,1
/// neighbors 1,0: 1,0 -1,0 0,-1
/// mirror-x true
/// ```
pub fn parse_grid_file(text: &str) -> Result<GridModel> {
    let mut name = None;
    let mut lattice = None;
    let mut cosets: Option<Vec<Cell>> = None;
    let mut neighbor_lines: Vec<(Cell, Vec<Cell>)> = Vec::new();
    let mut mirror_x = false;

    let parse_cell = |tok: &str| -> Result<Cell> {
        let (x, y) = tok
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected 'x,y', got '{tok}'")))?;
        Ok(Cell::new(
            x.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer '{x}'")))?,
            y.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer '{y}'")))?,
        ))
    };

    for line in text.lines() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match key {
            "name" => name = Some(rest.to_string()),
            "lattice" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                if toks.len() != 2 {
                    return Err(Error::Parse("lattice needs two basis vectors".into()));
                }
                lattice = Some(Lattice2::new(parse_cell(toks[0])?, parse_cell(toks[1])?)?);
            }
            "cosets" => {
                cosets = Some(
                    rest.split_whitespace()
                        .map(parse_cell)
                        .collect::<Result<_>>()?,
                );
            }
            "neighbors" => {
                let (rep, offs) = rest
                    .split_once(':')
                    .ok_or_else(|| Error::Parse("neighbors line needs 'rep: offsets'".into()))?;
                let rep = parse_cell(rep.trim())?;
                let offs = offs
                    .split_whitespace()
                    .map(parse_cell)
                    .collect::<Result<_>>()?;
                neighbor_lines.push((rep, offs));
            }
            "mirror-x" => mirror_x = rest == "true",
            other => return Err(Error::Parse(format!("unknown grid key '{other}'"))),
        }
    }

    let name = name.ok_or_else(|| Error::Parse("grid file missing 'name'".into()))?;
    let lattice = lattice.ok_or_else(|| Error::Parse("grid file missing 'lattice'".into()))?;
    let cosets = cosets.ok_or_else(|| Error::Parse("grid file missing 'cosets'".into()))?;
    let mut offsets = vec![Vec::new(); cosets.len()];
    for (rep, offs) in neighbor_lines {
        let idx = cosets
            .iter()
            .position(|&d| d == rep)
            .ok_or_else(|| Error::Parse(format!("neighbors for unknown coset {rep}")))?;
        offsets[idx] = offs;
    }
    if offsets.iter().any(Vec::is_empty) {
        return Err(Error::Parse("every coset needs a neighbors line".into()));
    }
    GridModel::new(name, lattice, cosets, offsets, mirror_x)
}

#[cfg(test)]
mod tests;
