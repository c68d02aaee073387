//! Semistandard and standard Young tableaux on skew shapes, special cells
//! with their t-weights, starred tableaux with sign and t-statistic, descent
//! and ascent sets, and the standardization bijection between starred
//! semistandard tableaux and pairs (starred standard tableau, compatible word).

use crate::error::{Error, Result};
use crate::indexset::{Cell, Composition, SkewShape};
use crate::tpoly::TPoly;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// Filling of a skew shape: `rows[i]` holds the entries of row i+1 in the
/// columns the shape occupies there. Rows weakly increase left to right,
/// columns strictly increase top to bottom.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let outer = self.shape.outer();
        let inner = self.shape.inner();
        if self.rows.len() != outer.len() {
            return Err(Error::Invalid(format!(
                "tableau has {} rows but shape {} has {}",
                self.rows.len(),
                self.shape,
                outer.len()
            )));
        }
        for (idx, row) in self.rows.iter().enumerate() {
            let i = idx + 1;
            let expect = outer.part(i) - inner.part(i);
            if row.len() != expect {
                return Err(Error::Invalid(format!(
                    "row {i} has {} entries, shape {} wants {expect}",
                    row.len(),
                    self.shape
                )));
            }
            if row.iter().any(|&v| v == 0) {
                return Err(Error::Invalid(format!("row {i} has a zero entry")));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Invalid(format!(
                    "row {i} is not weakly increasing: {row:?}"
                )));
            }
        }
        for (i, j) in self.shape.cells() {
            if i > 1 && self.shape.contains_cell((i - 1, j)) {
                let above = self.get((i - 1, j)).unwrap();
                let here = self.get((i, j)).unwrap();
                if above >= here {
                    return Err(Error::Invalid(format!(
                        "column {j} is not strictly increasing at rows {} and {i}",
                        i - 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n_cells(&self) -> usize {
        self.shape.n_cells()
    }

    /// Entry at a 1-based cell, None outside the shape.
    pub fn get(&self, cell: Cell) -> Option<usize> {
        let (i, j) = cell;
        if !self.shape.contains_cell(cell) {
            return None;
        }
        Some(self.rows[i - 1][j - 1 - self.shape.inner().part(i)])
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Multiplicity vector: index v-1 counts the entries equal to v.
    pub fn content(&self) -> Vec<usize> {
        let mut m = vec![0usize; self.max_entry()];
        for row in &self.rows {
            for &v in row {
                m[v - 1] += 1;
            }
        }
        m
    }

    /// Entries are exactly 1..n with n the number of cells.
    pub fn is_standard(&self) -> bool {
        self.content().iter().all(|&c| c == 1) && self.max_entry() == self.n_cells()
    }

    /// Position of the value v in a standard tableau.
    pub fn cell_of(&self, v: usize) -> Option<Cell> {
        self.shape.cells().into_iter().find(|&c| self.get(c) == Some(v))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({} | ", self.shape)?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            write!(f, "{row:?}")?;
        }
        write!(f, ")")
    }
}

/// All semistandard fillings of the shape with entries in [1, max_entry],
/// optionally with exact content (part i of the content is the multiplicity
/// of i). Output is ordered lexicographically by the row-major entry sequence.
pub fn enumerate_ssyt(
    shape: &SkewShape,
    max_entry: usize,
    content: Option<&Composition>,
) -> Result<Vec<Tableau>> {
    if let Some(c) = content {
        if c.size() != shape.n_cells() {
            return Err(Error::Invalid(format!(
                "content {c} has size {} but shape {} has {} cells",
                c.size(),
                shape,
                shape.n_cells()
            )));
        }
    }
    let cells = shape.cells();
    let target: Option<Vec<usize>> = content.map(|c| c.parts().to_vec());
    let top = match &target {
        Some(t) => t.len().min(max_entry),
        None => max_entry,
    };
    let mut grid: Vec<Vec<usize>> = shape
        .outer()
        .parts()
        .iter()
        .enumerate()
        .map(|(idx, &o)| vec![0usize; o - shape.inner().part(idx + 1)])
        .collect();
    let mut used = vec![0usize; top];
    let mut out = Vec::new();

    fn fill(
        pos: usize,
        cells: &[Cell],
        shape: &SkewShape,
        top: usize,
        target: &Option<Vec<usize>>,
        grid: &mut Vec<Vec<usize>>,
        used: &mut Vec<usize>,
        out: &mut Vec<Tableau>,
    ) {
        if pos == cells.len() {
            if let Some(t) = target {
                if used != t {
                    return;
                }
            }
            let rows = grid.clone();
            out.push(Tableau {
                shape: shape.clone(),
                rows,
            });
            return;
        }
        let (i, j) = cells[pos];
        let inner = shape.inner();
        let left = if j > 1 && shape.contains_cell((i, j - 1)) {
            grid[i - 1][j - 2 - inner.part(i)]
        } else {
            0
        };
        let above = if i > 1 && shape.contains_cell((i - 1, j)) {
            grid[i - 2][j - 1 - inner.part(i - 1)]
        } else {
            0
        };
        let lo = left.max(above + 1).max(1);
        for v in lo..=top {
            if let Some(t) = target {
                if used[v - 1] >= t[v - 1] {
                    continue;
                }
            }
            grid[i - 1][j - 1 - inner.part(i)] = v;
            used[v - 1] += 1;
            fill(pos + 1, cells, shape, top, target, grid, used, out);
            used[v - 1] -= 1;
        }
        grid[i - 1][j - 1 - inner.part(i)] = 0;
    }

    if let Some(t) = &target {
        if t.len() > top {
            return Ok(Vec::new());
        }
    }
    fill(0, &cells, shape, top, &target, &mut grid, &mut used, &mut out);
    Ok(out)
}

/// Standard tableaux: semistandard with content (1, ..., 1).
pub fn enumerate_syt(shape: &SkewShape) -> Result<Vec<Tableau>> {
    let n = shape.n_cells();
    if n == 0 {
        return enumerate_ssyt(shape, 0, None);
    }
    let content = Composition::new(vec![1; n])?;
    enumerate_ssyt(shape, n, Some(&content))
}

/// Cells of the inner partition lying in column `col`, at row >= `from_row`.
fn inner_cells_below(shape: &SkewShape, col: usize, from_row: usize) -> usize {
    if col == 0 {
        return 0;
    }
    let inner = shape.inner();
    (from_row..=inner.len())
        .filter(|&u| inner.part(u) >= col)
        .count()
}

/// Special cells with their weights, in row-major cell order.
///
/// A cell is special when it is not in column 1 and its entry does not occur
/// in the column immediately left. Its weight counts the cells weakly below
/// it in that column whose entries are smaller, plus the inner cells weakly
/// below it there.
pub fn special_cells(t: &Tableau) -> Vec<(Cell, usize)> {
    let shape = t.shape();
    let mut out = Vec::new();
    for (i, j) in shape.cells() {
        if j == 1 {
            continue;
        }
        let v = t.get((i, j)).unwrap();
        let col_left: Vec<(usize, usize)> = (1..=shape.outer().len())
            .filter_map(|u| t.get((u, j - 1)).map(|e| (u, e)))
            .collect();
        if col_left.iter().any(|&(_, e)| e == v) {
            continue;
        }
        let wt = col_left.iter().filter(|&&(u, e)| u >= i && e < v).count()
            + inner_cells_below(shape, j - 1, i);
        out.push(((i, j), wt));
    }
    out
}

/// Q-special cells with their weights, in row-major cell order.
///
/// A cell is Q-special when its entry does not occur in the column
/// immediately right. The weight of such a cell (i, j) with entry v is
/// i minus the number of cells in column j+1 that belong to the inner shape
/// or hold entries at most v.
pub fn qspecial_cells(t: &Tableau) -> Vec<(Cell, usize)> {
    let shape = t.shape();
    let mut out = Vec::new();
    for (i, j) in shape.cells() {
        let v = t.get((i, j)).unwrap();
        let col_right: Vec<(usize, usize)> = (1..=shape.outer().len())
            .filter_map(|u| t.get((u, j + 1)).map(|e| (u, e)))
            .collect();
        if col_right.iter().any(|&(_, e)| e == v) {
            continue;
        }
        let wt = i - col_right.iter().filter(|&&(_, e)| e <= v).count()
            - inner_cells_below(shape, j + 1, 1);
        debug_assert_eq!(
            wt,
            multiplicity_in_prefix(t, v, j),
            "weight of Q-special cell ({i},{j}) disagrees with the strip filtration"
        );
        out.push(((i, j), wt));
    }
    out
}

/// Number of rows of length j in the shape formed by the inner partition
/// plus all cells with entries at most v. Cross-check for Q-weights.
fn multiplicity_in_prefix(t: &Tableau, v: usize, j: usize) -> usize {
    let shape = t.shape();
    let mut count = 0;
    for u in 1..=shape.outer().len() {
        let mut len = shape.inner().part(u);
        for col in shape.inner().part(u) + 1..=shape.outer().part(u) {
            if t.get((u, col)).is_some_and(|e| e <= v) {
                len += 1;
            }
        }
        if len == j {
            count += 1;
        }
    }
    count
}

/// Product of (1 - t^wt) over the special cells: the coefficient a tableau
/// contributes to the monomial expansion of P.
pub fn psi_poly(t: &Tableau) -> TPoly {
    special_cells(t)
        .iter()
        .fold(TPoly::one(), |acc, &(_, w)| &acc * &TPoly::one_minus_t_pow(w))
}

/// Product of (1 - t^wt) over the Q-special cells: the Q-side analogue.
pub fn phi_poly(t: &Tableau) -> TPoly {
    qspecial_cells(t)
        .iter()
        .fold(TPoly::one(), |acc, &(_, w)| &acc * &TPoly::one_minus_t_pow(w))
}

/// Which star discipline a starred tableau uses: stars on special cells with
/// P-weights, or on Q-special cells with Q-weights.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum StarVariant {
    P,
    Q,
}

/// A tableau with a set of starred cells drawn from its (Q-)special cells.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarredTableau {
    tableau: Tableau,
    stars: BTreeSet<Cell>,
    variant: StarVariant,
}

impl StarredTableau {
    pub fn new(tableau: Tableau, stars: BTreeSet<Cell>, variant: StarVariant) -> Result<Self> {
        let allowed: BTreeSet<Cell> = match variant {
            StarVariant::P => special_cells(&tableau).into_iter().map(|(c, _)| c).collect(),
            StarVariant::Q => qspecial_cells(&tableau).into_iter().map(|(c, _)| c).collect(),
        };
        if let Some(bad) = stars.iter().find(|c| !allowed.contains(c)) {
            return Err(Error::Invalid(format!(
                "cell {bad:?} is not {} for this tableau",
                match variant {
                    StarVariant::P => "special",
                    StarVariant::Q => "Q-special",
                }
            )));
        }
        Ok(StarredTableau {
            tableau,
            stars,
            variant,
        })
    }

    pub fn tableau(&self) -> &Tableau {
        &self.tableau
    }

    pub fn stars(&self) -> &BTreeSet<Cell> {
        &self.stars
    }

    pub fn variant(&self) -> StarVariant {
        self.variant
    }

    /// (-1)^(number of stars).
    pub fn sign(&self) -> i64 {
        if self.stars.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Sum of the weights of the starred cells.
    pub fn tstat(&self) -> usize {
        let weights = match self.variant {
            StarVariant::P => special_cells(&self.tableau),
            StarVariant::Q => qspecial_cells(&self.tableau),
        };
        weights
            .iter()
            .filter(|(c, _)| self.stars.contains(c))
            .map(|&(_, w)| w)
            .sum()
    }
}

impl fmt::Debug for StarredTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "StarredTableau({:?}, stars {:?}, {:?})",
            self.tableau, self.stars, self.variant
        )
    }
}

fn require_standard(t: &Tableau, what: &str) -> Result<Vec<Cell>> {
    if !t.is_standard() {
        return Err(Error::Invalid(format!("{what} requires a standard tableau")));
    }
    // positions[v-1] = cell of v
    let mut positions = vec![(0usize, 0usize); t.n_cells()];
    for c in t.shape().cells() {
        positions[t.get(c).unwrap() - 1] = c;
    }
    Ok(positions)
}

/// Descent set of a standard tableau: the k for which k+1 sits in a lower row.
pub fn des_set(t: &Tableau) -> Result<Vec<usize>> {
    let pos = require_standard(t, "descent set")?;
    Ok((1..t.n_cells())
        .filter(|&k| pos[k].0 > pos[k - 1].0)
        .collect())
}

/// Descent composition comp(Des).
pub fn des_comp(t: &Tableau) -> Result<Composition> {
    Composition::from_sub(&des_set(t)?, t.n_cells())
}

/// Ascent set of a starred standard tableau: descents of the underlying
/// tableau, plus the k whose successor k+1 sits in a starred cell in the
/// column immediately right of k's column.
pub fn asc_set(st: &StarredTableau) -> Result<Vec<usize>> {
    if st.variant != StarVariant::P {
        return Err(Error::Invalid("ascent set applies to P-starred tableaux".into()));
    }
    let t = &st.tableau;
    let pos = require_standard(t, "ascent set")?;
    Ok((1..t.n_cells())
        .filter(|&k| {
            let ck = pos[k - 1];
            let cnext = pos[k];
            cnext.0 > ck.0 || (st.stars.contains(&cnext) && cnext.1 == ck.1 + 1)
        })
        .collect())
}

pub fn asc_comp(st: &StarredTableau) -> Result<Composition> {
    Composition::from_sub(&asc_set(st)?, st.tableau.n_cells())
}

/// Q-ascent set: descents of the underlying tableau, plus the k sitting in a
/// starred cell whose successor k+1 lies in the column immediately right.
pub fn qasc_set(st: &StarredTableau) -> Result<Vec<usize>> {
    if st.variant != StarVariant::Q {
        return Err(Error::Invalid(
            "Q-ascent set applies to Q-starred tableaux".into(),
        ));
    }
    let t = &st.tableau;
    let pos = require_standard(t, "Q-ascent set")?;
    Ok((1..t.n_cells())
        .filter(|&k| {
            let ck = pos[k - 1];
            let cnext = pos[k];
            cnext.0 > ck.0 || (st.stars.contains(&ck) && cnext.1 == ck.1 + 1)
        })
        .collect())
}

pub fn qasc_comp(st: &StarredTableau) -> Result<Composition> {
    Composition::from_sub(&qasc_set(st)?, st.tableau.n_cells())
}

/// Special cells of a standard tableau that change the ascent set when
/// starred: the entry's predecessor sits in the column immediately left,
/// weakly lower.
pub fn espec_cells(t: &Tableau) -> Result<Vec<Cell>> {
    let pos = require_standard(t, "espec")?;
    let spec: Vec<Cell> = special_cells(t).into_iter().map(|(c, _)| c).collect();
    let out: Vec<Cell> = spec
        .iter()
        .copied()
        .filter(|&c| {
            let v = t.get(c).unwrap();
            if v == 1 {
                return false;
            }
            let cprev = pos[v - 2];
            cprev.1 + 1 == c.1 && cprev.0 >= c.0
        })
        .collect();
    #[cfg(debug_assertions)]
    {
        // Definitional form: starring exactly this cell changes the ascents.
        let empty = StarredTableau::new(t.clone(), BTreeSet::new(), StarVariant::P).unwrap();
        let base = asc_set(&empty).unwrap();
        for &c in &spec {
            let single =
                StarredTableau::new(t.clone(), [c].into_iter().collect(), StarVariant::P).unwrap();
            let changed = asc_set(&single).unwrap() != base;
            debug_assert_eq!(changed, out.contains(&c), "espec mismatch at {c:?}");
        }
    }
    Ok(out)
}

/// Standardizes a starred tableau: occurrences of each value are renumbered
/// left to right into consecutive integers. Returns the starred standard
/// tableau (stars stay on the same cells) and the sorted content word.
pub fn standardize(st: &StarredTableau) -> Result<(StarredTableau, Vec<usize>)> {
    let t = &st.tableau;
    let content = t.content();
    let shape = t.shape();
    let mut rows = t.rows().to_vec();
    let mut next = {
        // next[v-1] = first standard value not yet used for entry v
        let mut acc = 0;
        content
            .iter()
            .map(|&m| {
                let start = acc + 1;
                acc += m;
                start
            })
            .collect::<Vec<usize>>()
    };
    // Left to right = ascending column order; equal entries never share a
    // column, so ordering by column alone is well defined.
    let mut cells = shape.cells();
    cells.sort_by_key(|&(i, j)| (j, i));
    for (i, j) in cells {
        let v = t.get((i, j)).unwrap();
        rows[i - 1][j - 1 - shape.inner().part(i)] = next[v - 1];
        next[v - 1] += 1;
    }
    let std_tab = Tableau::new(shape.clone(), rows)?;
    let starred = StarredTableau::new(std_tab, st.stars.clone(), st.variant)?;
    let mut w = Vec::with_capacity(t.n_cells());
    for (v, &m) in content.iter().enumerate() {
        w.extend(std::iter::repeat(v + 1).take(m));
    }
    Ok((starred, w))
}

/// Inverse of standardization: collapses the standard values back to the
/// letters of w. The word must be weakly increasing and compatible with the
/// (Q-)ascent set of the starred tableau: strictly increasing at every ascent.
pub fn unstandardize(st: &StarredTableau, w: &[usize]) -> Result<StarredTableau> {
    let t = &st.tableau;
    let n = t.n_cells();
    if w.len() != n {
        return Err(Error::Invalid(format!(
            "word length {} does not match {} cells",
            w.len(),
            n
        )));
    }
    if w.iter().any(|&x| x == 0) {
        return Err(Error::Invalid("word letters must be positive".into()));
    }
    if w.windows(2).any(|p| p[0] > p[1]) {
        return Err(Error::Invalid(format!(
            "word {w:?} is not weakly increasing"
        )));
    }
    let ascents = match st.variant {
        StarVariant::P => asc_set(st)?,
        StarVariant::Q => qasc_set(st)?,
    };
    for &k in &ascents {
        if w[k - 1] >= w[k] {
            return Err(Error::Invalid(format!(
                "word {w:?} is not compatible: needs a strict increase at position {k}"
            )));
        }
    }
    let shape = t.shape();
    let mut rows = t.rows().to_vec();
    for (i, j) in shape.cells() {
        let v = t.get((i, j)).unwrap();
        rows[i - 1][j - 1 - shape.inner().part(i)] = w[v - 1];
    }
    let collapsed = Tableau::new(shape.clone(), rows).map_err(|e| {
        Error::Internal(format!("unstandardization produced a bad tableau: {e}"))
    })?;
    StarredTableau::new(collapsed, st.stars.clone(), st.variant)
        .map_err(|e| Error::Internal(format!("stars lost under unstandardization: {e}")))
}
