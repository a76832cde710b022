//! Threshold-clause families characterizing code properties.
//!
//! A code property is compiled into finitely many translation classes of
//! clauses "at least t codewords among these cells"; the full constraint set
//! is the closure of the classes under the grid's translation lattice. With
//! all thresholds 1 this is exactly a family of forbidden all-zero patterns.

use crate::errors::{Error, Result};
use crate::grid::{Cell, GridModel};
use std::collections::{BTreeSet, HashSet};
use std::fmt;

/// The three supported code properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CodeKind {
    Identifying,
    LocatingDominating,
    RedundantLocatingDominating,
}

impl CodeKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "identifying" | "id" => Ok(CodeKind::Identifying),
            "ld" | "locating-dominating" => Ok(CodeKind::LocatingDominating),
            "rld" | "redundant-ld" => Ok(CodeKind::RedundantLocatingDominating),
            other => Err(Error::Parse(format!(
                "unknown code kind '{other}' (expected identifying | ld | rld)"
            ))),
        }
    }

    pub fn token(&self) -> &'static str {
        match self {
            CodeKind::Identifying => "identifying",
            CodeKind::LocatingDominating => "ld",
            CodeKind::RedundantLocatingDominating => "rld",
        }
    }
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A code property plus radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeSpec {
    pub kind: CodeKind,
    pub radius: u32,
}

impl CodeSpec {
    pub fn new(kind: CodeKind, radius: u32) -> Self {
        assert!(radius >= 1, "radius must be positive");
        CodeSpec { kind, radius }
    }
}

/// "At least `threshold` codewords among `cells`."
///
/// Cells are stored sorted, translated so that the anchor (leftmost, then
/// bottommost cell) sits at the coset representative of its orbit. The
/// display form instead puts the anchor at the origin, which is how such
/// families are conventionally listed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClauseSet {
    pub cells: Vec<Cell>,
    pub threshold: u32,
}

impl ClauseSet {
    /// Canonicalizes an arbitrary translate: sorts cells and shifts the
    /// anchor onto its coset representative. Injective on translation
    /// classes of the grid's lattice.
    pub fn canonical(
        grid: &GridModel,
        cells: impl IntoIterator<Item = Cell>,
        threshold: u32,
    ) -> Self {
        let mut cells: Vec<Cell> = cells
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        assert!(!cells.is_empty(), "clause must be nonempty");
        assert!(threshold >= 1 && threshold as usize <= cells.len());
        let anchor = cells[0];
        let shift = grid.coset_representative(anchor) - anchor;
        for c in &mut cells {
            *c = *c + shift;
        }
        ClauseSet { cells, threshold }
    }

    /// Anchor of the stored form: its leftmost-then-bottommost cell.
    pub fn anchor(&self) -> Cell {
        self.cells[0]
    }

    /// The clause translated so its anchor is at the origin.
    pub fn display_cells(&self) -> Vec<Cell> {
        let a = self.anchor();
        self.cells.iter().map(|&c| c - a).collect()
    }

    /// Column span in cells (max x - min x + 1).
    pub fn width(&self) -> i64 {
        let min = self.cells.iter().map(|c| c.x).min().unwrap();
        let max = self.cells.iter().map(|c| c.x).max().unwrap();
        max - min + 1
    }
}

/// Minimal family of clause classes for one grid and code spec.
#[derive(Debug, Clone)]
pub struct ClauseFamily {
    pub classes: Vec<ClauseSet>,
    pub grid_name: String,
    pub spec: CodeSpec,
}

impl ClauseFamily {
    pub fn max_width(&self) -> i64 {
        self.classes.iter().map(ClauseSet::width).max().unwrap_or(1)
    }

    pub fn max_threshold(&self) -> u32 {
        self.classes.iter().map(|c| c.threshold).max().unwrap_or(1)
    }

    /// One clause per line: threshold, then the cell list of the stored form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.classes {
            out.push_str(&c.threshold.to_string());
            for cell in &c.cells {
                out.push_str(&format!(" ({},{})", cell.x, cell.y));
            }
            out.push('\n');
        }
        out
    }

    /// Parses the line format written by [`to_text`]. Clauses are
    /// re-canonicalized against the provided grid and minimized.
    pub fn from_text(grid: &GridModel, spec: CodeSpec, text: &str) -> Result<Self> {
        let mut classes = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut toks = line.split_whitespace();
            let threshold: u32 = toks
                .next()
                .unwrap()
                .parse()
                .map_err(|_| Error::Parse(format!("bad threshold in '{line}'")))?;
            let mut cells = Vec::new();
            for t in toks {
                let t = t.trim_start_matches('(').trim_end_matches(')');
                let (x, y) = t
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("bad cell '{t}'")))?;
                cells.push(Cell::new(
                    x.parse()
                        .map_err(|_| Error::Parse(format!("bad cell '{t}'")))?,
                    y.parse()
                        .map_err(|_| Error::Parse(format!("bad cell '{t}'")))?,
                ));
            }
            if cells.is_empty() {
                return Err(Error::Parse(format!("clause with no cells: '{line}'")));
            }
            classes.push(ClauseSet::canonical(grid, cells, threshold));
        }
        Ok(minimize(grid, spec, classes))
    }

    /// TikZ rendering in the style of minimal forbidden-pattern figures: one
    /// circle per cell, classes laid out side by side, for visual diffing.
    pub fn to_tikz(&self) -> String {
        let mut out = String::from("\\begin{tikzpicture}[scale=0.3]\n");
        let mut x_base = 0i64;
        for class in &self.classes {
            let cells = class.display_cells();
            let min_x = cells.iter().map(|c| c.x).min().unwrap();
            let max_x = cells.iter().map(|c| c.x).max().unwrap();
            let min_y = cells.iter().map(|c| c.y).min().unwrap();
            for c in &cells {
                out.push_str(&format!(
                    "\\draw ({}.5, {}.5) circle (0.33); % t={}\n",
                    x_base + c.x - min_x,
                    c.y - min_y,
                    class.threshold
                ));
            }
            x_base += max_x - min_x + 3;
        }
        out.push_str("\\end{tikzpicture}\n");
        out
    }
}

/// Generates the clause family for a grid and code spec, then minimizes it.
///
/// Domination: one clause `B_r(u)` per coset representative `u`. Separation:
/// one clause per translation class of unordered pairs at graph distance at
/// most `2r` (farther pairs have disjoint balls and are separated whenever
/// domination holds). Identifying separates by the symmetric difference of
/// balls; locating-dominating adds the pair itself to the clause; redundant
/// locating-dominating raises every threshold to 2.
pub fn generate_clauses(grid: &GridModel, spec: CodeSpec) -> Result<ClauseFamily> {
    let r = spec.radius;
    let threshold = match spec.kind {
        CodeKind::RedundantLocatingDominating => 2,
        _ => 1,
    };
    let mut raw: Vec<ClauseSet> = Vec::new();

    for &u in grid.cosets() {
        raw.push(ClauseSet::canonical(grid, grid.ball(u, r), threshold));
    }

    for (u, v) in separation_pairs(grid, r) {
        let bu: HashSet<Cell> = grid.ball(u, r).into_iter().collect();
        let bv: HashSet<Cell> = grid.ball(v, r).into_iter().collect();
        let mut sym: Vec<Cell> = bu.symmetric_difference(&bv).copied().collect();
        if sym.is_empty() {
            return Err(Error::TwinVertices(u, v, r));
        }
        if matches!(
            spec.kind,
            CodeKind::LocatingDominating | CodeKind::RedundantLocatingDominating
        ) {
            sym.push(u);
            sym.push(v);
        }
        raw.push(ClauseSet::canonical(grid, sym, threshold));
    }

    Ok(minimize(grid, spec, raw))
}

/// One representative per translation class of unordered pairs `{u, v}` with
/// `0 < d(u, v) <= 2r`.
fn separation_pairs(grid: &GridModel, r: u32) -> Vec<(Cell, Cell)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &u in grid.cosets() {
        for v in grid.ball(u, 2 * r) {
            if v == u {
                continue;
            }
            // canonical key: both orderings, each shifted so its first
            // element sits at a coset representative
            let s1 = grid.coset_representative(u) - u;
            let k1 = (u + s1, v + s1);
            let s2 = grid.coset_representative(v) - v;
            let k2 = (v + s2, u + s2);
            let key = k1.min(k2);
            if seen.insert(key) {
                out.push(key);
            }
        }
    }
    out.sort();
    out
}

/// Removes clauses implied by others: `(S, t)` is dropped when some lattice
/// translate of a different `(S', t')` satisfies `S' ⊆ S` and `t' >= t`.
/// Duplicates up to lattice translation collapse to one. The result is
/// sorted by size, then by the cell list.
pub fn minimize(grid: &GridModel, spec: CodeSpec, raw: Vec<ClauseSet>) -> ClauseFamily {
    let mut classes: Vec<ClauseSet> = raw
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    classes.sort_by(|a, b| {
        (a.cells.len(), &a.cells, a.threshold).cmp(&(b.cells.len(), &b.cells, b.threshold))
    });

    let lattice = grid.lattice();
    let dominates = |small: &ClauseSet, big: &ClauseSet| -> bool {
        if small.threshold < big.threshold || small.cells.len() > big.cells.len() {
            return false;
        }
        let big_set: HashSet<Cell> = big.cells.iter().copied().collect();
        // try aligning the small clause's anchor onto each cell of the big one
        let s_anchor = small.anchor();
        big.cells.iter().any(|&b| {
            let shift = b - s_anchor;
            lattice.contains(shift) && small.cells.iter().all(|&c| big_set.contains(&(c + shift)))
        })
    };

    // after dedup, domination is a strict partial order (mutual domination
    // would force identical canonical forms), so dropping everything that any
    // other class dominates is sound by transitivity
    let keep: Vec<ClauseSet> = classes
        .iter()
        .filter(|c| !classes.iter().any(|k| k != *c && dominates(k, c)))
        .cloned()
        .collect();

    ClauseFamily {
        classes: keep,
        grid_name: grid.name().to_string(),
        spec,
    }
}

/// A reported clause violation: the translated clause and how many codewords
/// it actually contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseViolation {
    pub class_index: usize,
    pub cells: Vec<Cell>,
    pub threshold: u32,
    pub found: u32,
}

/// Checks every lattice translate of every family class whose anchor lies in
/// `anchor_region` against a code oracle.
pub fn clause_check(
    grid: &GridModel,
    family: &ClauseFamily,
    code: impl Fn(Cell) -> bool,
    anchor_region: &[Cell],
) -> Vec<ClauseViolation> {
    let lattice = grid.lattice();
    let mut violations = Vec::new();
    for (i, class) in family.classes.iter().enumerate() {
        let anchor = class.anchor();
        for &a in anchor_region {
            let shift = a - anchor;
            if !lattice.contains(shift) {
                continue;
            }
            let cells: Vec<Cell> = class.cells.iter().map(|&c| c + shift).collect();
            let found = cells.iter().filter(|&&c| code(c)).count() as u32;
            if found < class.threshold {
                violations.push(ClauseViolation {
                    class_index: i,
                    cells,
                    threshold: class.threshold,
                    found,
                });
            }
        }
    }
    violations
}
