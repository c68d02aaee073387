//! Composition tableaux: left-justified fillings of composition diagrams
//! whose rows weakly decrease, with the first-column and triple-rule
//! conditions. Provides enumeration by content, descent compositions for the
//! standard ones, ascent statistics, and the refinement relabeling that
//! matches standard tableaux paired with finer compositions to semistandard
//! ones.

use crate::error::{Error, Result};
use crate::indexset::{is_finer, Composition};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Filling of a composition diagram: `rows[i]` holds the entries of row i+1,
/// which has `shape.parts()[i]` cells, left-justified.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompTableau {
    shape: Composition,
    rows: Vec<Vec<usize>>,
}

impl CompTableau {
    /// Builds a semistandard composition tableau, rejecting fillings that
    /// break the row, first-column, or triple-rule conditions.
    pub fn new(shape: Composition, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.len() {
            return Err(Error::Invalid(format!(
                "{} rows given for shape {shape} with {} parts",
                rows.len(),
                shape.len()
            )));
        }
        for (idx, row) in rows.iter().enumerate() {
            if row.len() != shape.parts()[idx] {
                return Err(Error::Invalid(format!(
                    "row {} has {} entries, shape {shape} wants {}",
                    idx + 1,
                    row.len(),
                    shape.parts()[idx]
                )));
            }
            if row.iter().any(|&v| v == 0) {
                return Err(Error::Invalid(format!("row {} has a zero entry", idx + 1)));
            }
        }
        let t = CompTableau { shape, rows };
        if let Some(why) = t.violation() {
            return Err(Error::Invalid(why));
        }
        Ok(t)
    }

    /// First failed condition, or None for a valid tableau. Shapes of rows
    /// are assumed to already match.
    fn violation(&self) -> Option<String> {
        // Rows weakly decrease left to right.
        for (idx, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] < w[1]) {
                return Some(format!("row {} is not weakly decreasing", idx + 1));
            }
        }
        // First column strictly increases top to bottom.
        for i in 1..self.rows.len() {
            if self.rows[i - 1][0] >= self.rows[i][0] {
                return Some(format!(
                    "first column is not strictly increasing at rows {} and {}",
                    i,
                    i + 1
                ));
            }
        }
        // Triple rule on cells (i,k), (j,k) with i < j. When the first case
        // reads column k-1 = 0 it holds vacuously; in the second case the
        // cell (j,k+1) always exists because k <= shape_i < shape_j.
        let a = self.shape.parts();
        for i in 0..self.rows.len() {
            for j in i + 1..self.rows.len() {
                for k in 1..=a[i].min(a[j]) {
                    let tik = self.rows[i][k - 1];
                    let tjk = self.rows[j][k - 1];
                    let ok = if a[i] >= a[j] {
                        // At k = 1 the missing left neighbor counts as
                        // smaller than everything, so the case is vacuous.
                        tjk < tik || k == 1 || self.rows[i][k - 2] < tjk
                    } else {
                        tjk < tik || tik < self.rows[j][k]
                    };
                    if !ok {
                        return Some(format!(
                            "triple rule fails at rows {},{} column {k}",
                            i + 1,
                            j + 1
                        ));
                    }
                }
            }
        }
        None
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n_cells(&self) -> usize {
        self.shape.size()
    }

    /// Entry at a 1-based (row, column) cell.
    pub fn get(&self, cell: (usize, usize)) -> Option<usize> {
        let (i, j) = cell;
        if i == 0 || j == 0 || i > self.rows.len() || j > self.rows[i - 1].len() {
            return None;
        }
        Some(self.rows[i - 1][j - 1])
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Multiplicity vector; index v-1 counts the entries equal to v.
    pub fn content(&self) -> Vec<usize> {
        let mut m = vec![0usize; self.max_entry()];
        for row in &self.rows {
            for &v in row {
                m[v - 1] += 1;
            }
        }
        m
    }

    /// Content as a composition; every value up to the maximum must occur.
    pub fn content_composition(&self) -> Result<Composition> {
        Composition::new(self.content())
    }

    pub fn is_standard(&self) -> bool {
        self.content().iter().all(|&c| c == 1) && self.max_entry() == self.n_cells()
    }

    /// Position of the value v when v occurs exactly once.
    pub fn cell_of(&self, v: usize) -> Option<(usize, usize)> {
        let mut found = None;
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if e == v {
                    if found.is_some() {
                        return None;
                    }
                    found = Some((i + 1, j + 1));
                }
            }
        }
        found
    }

    /// Columns of the leftmost and rightmost occurrences of v.
    fn col_span(&self, v: usize) -> Option<(usize, usize)> {
        let mut lo = usize::MAX;
        let mut hi = 0;
        for row in &self.rows {
            for (j, &e) in row.iter().enumerate() {
                if e == v {
                    lo = lo.min(j + 1);
                    hi = hi.max(j + 1);
                }
            }
        }
        (hi > 0).then_some((lo, hi))
    }
}

impl fmt::Debug for CompTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CompTableau({} | ", self.shape)?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            write!(f, "{row:?}")?;
        }
        write!(f, ")")
    }
}

/// All semistandard composition tableaux of the shape with the given content.
/// Output is ordered lexicographically by the row-major entry sequence.
pub fn enumerate_ssct(shape: &Composition, content: &Composition) -> Result<Vec<CompTableau>> {
    if content.size() != shape.size() {
        return Err(Error::Invalid(format!(
            "content {content} has size {} but shape {shape} has {} cells",
            content.size(),
            shape.size()
        )));
    }
    let parts = shape.parts().to_vec();
    let cells: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
        .collect();
    let target = content.parts().to_vec();
    let top = target.len();
    let mut rows: Vec<Vec<usize>> = parts.iter().map(|&len| vec![0usize; len]).collect();
    let mut used = vec![0usize; top];
    let mut out = Vec::new();

    // Row-major backtracking. Prunes on weak row decrease, strict first
    // column, distinct column entries, and content counts; completed grids
    // face the full triple rule.
    fn fill(
        pos: usize,
        cells: &[(usize, usize)],
        shape: &Composition,
        target: &[usize],
        rows: &mut Vec<Vec<usize>>,
        used: &mut Vec<usize>,
        out: &mut Vec<CompTableau>,
    ) {
        if pos == cells.len() {
            let cand = CompTableau {
                shape: shape.clone(),
                rows: rows.clone(),
            };
            if cand.violation().is_none() {
                out.push(cand);
            }
            return;
        }
        let (i, j) = cells[pos];
        for v in 1..=target.len() {
            if used[v - 1] >= target[v - 1] {
                continue;
            }
            if j > 1 && rows[i - 1][j - 2] < v {
                continue; // row must weakly decrease
            }
            if j == 1 && i > 1 && rows[i - 2][0] >= v {
                continue; // first column must strictly increase
            }
            if (1..i).any(|u| rows[u - 1].len() >= j && rows[u - 1][j - 1] == v) {
                continue; // column entries are distinct
            }
            rows[i - 1][j - 1] = v;
            used[v - 1] += 1;
            fill(pos + 1, cells, shape, target, rows, used, out);
            used[v - 1] -= 1;
            rows[i - 1][j - 1] = 0;
        }
    }

    fill(0, &cells, shape, &target, &mut rows, &mut used, &mut out);
    Ok(out)
}

/// Standard composition tableaux: content (1, ..., 1).
pub fn enumerate_sct(shape: &Composition) -> Result<Vec<CompTableau>> {
    let n = shape.size();
    if n == 0 {
        return Ok(vec![CompTableau {
            shape: shape.clone(),
            rows: Vec::new(),
        }]);
    }
    enumerate_ssct(shape, &Composition::new(vec![1; n])?)
}

/// Descents of a standard composition tableau: the i lying weakly left of
/// i+1 (the column of i is at most the column of i+1).
pub fn sct_des_set(t: &CompTableau) -> Result<Vec<usize>> {
    if !t.is_standard() {
        return Err(Error::Invalid(
            "descent set requires a standard composition tableau".into(),
        ));
    }
    let n = t.n_cells();
    let mut col = vec![0usize; n];
    for (i, row) in t.rows().iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            col[v - 1] = j + 1;
            let _ = i;
        }
    }
    Ok((1..n).filter(|&k| col[k - 1] <= col[k]).collect())
}

/// Descent composition comp(Des).
pub fn sct_des_comp(t: &CompTableau) -> Result<Composition> {
    Composition::from_sub(&sct_des_set(t)?, t.n_cells())
}

/// Ascents of a semistandard composition tableau: the values i whose
/// leftmost occurrence is strictly right of the rightmost occurrence of i+1.
pub fn ssct_asc_set(t: &CompTableau) -> Vec<usize> {
    (1..t.max_entry())
        .filter(|&i| match (t.col_span(i), t.col_span(i + 1)) {
            (Some((lo_i, _)), Some((_, hi_next))) => lo_i > hi_next,
            _ => false,
        })
        .collect()
}

/// Sum of the ascent values.
pub fn ssct_sum_asc(t: &CompTableau) -> usize {
    ssct_asc_set(t).iter().sum()
}

/// Relabels a standard composition tableau along a refinement: the value v
/// becomes the index of the part of beta whose block of 1..n contains v.
/// Requires beta to refine the descent composition of the tableau; the
/// result is semistandard with content beta and ascent sum g(des, beta).
pub fn refine_relabel(t: &CompTableau, beta: &Composition) -> Result<CompTableau> {
    let gamma = sct_des_comp(t)?;
    if !is_finer(beta, &gamma)? {
        return Err(Error::Invalid(format!(
            "{beta} does not refine the descent composition {gamma}"
        )));
    }
    let mut letter = vec![0usize; beta.size()];
    let mut v = 0;
    for (i, &part) in beta.parts().iter().enumerate() {
        for _ in 0..part {
            letter[v] = i + 1;
            v += 1;
        }
    }
    let rows: Vec<Vec<usize>> = t
        .rows()
        .iter()
        .map(|row| row.iter().map(|&e| letter[e - 1]).collect())
        .collect();
    let out = CompTableau {
        shape: t.shape().clone(),
        rows,
    };
    if let Some(why) = out.violation() {
        return Err(Error::Internal(format!(
            "refinement relabeling left the composition tableau invalid: {why}"
        )));
    }
    debug_assert_eq!(out.content(), beta.parts());
    Ok(out)
}

/// Inverse of the refinement relabeling: renumbers the cells 1..n by value,
/// ties broken right to left. Returns the standard composition tableau; its
/// content composition is recovered as the original tableau's content.
pub fn unrefine(t: &CompTableau) -> Result<CompTableau> {
    let mut cells: Vec<(usize, usize, usize)> = Vec::with_capacity(t.n_cells());
    for (i, row) in t.rows().iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            cells.push((v, i + 1, j + 1));
        }
    }
    // Within one value, cells are numbered from the rightmost column.
    cells.sort_by(|a, b| a.0.cmp(&b.0).then(b.2.cmp(&a.2)));
    let mut rows = t.rows().to_vec();
    for (rank, &(_, i, j)) in cells.iter().enumerate() {
        rows[i - 1][j - 1] = rank + 1;
    }
    let out = CompTableau {
        shape: t.shape().clone(),
        rows,
    };
    if let Some(why) = out.violation() {
        return Err(Error::Internal(format!(
            "standardization left the composition tableau invalid: {why}"
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indexset::compositions_of;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn ctab(shape: &[usize], rows: &[&[usize]]) -> CompTableau {
        CompTableau::new(comp(shape), rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn accepts_the_reference_filling() {
        // Shape 5264, content 32313212.
        let t = ctab(
            &[5, 2, 6, 4],
            &[
                &[3, 2, 2, 1, 1],
                &[4, 1],
                &[7, 5, 5, 5, 3, 3],
                &[8, 8, 6, 6],
            ],
        );
        assert_eq!(t.content(), vec![3, 2, 3, 1, 3, 2, 1, 2]);
        assert_eq!(t.get((3, 1)), Some(7));
        assert_eq!(t.get((2, 3)), None);
    }

    #[test]
    fn rejects_bad_fillings() {
        // Row increasing.
        assert!(CompTableau::new(comp(&[2]), vec![vec![1, 2]]).is_err());
        // First column not strict.
        assert!(CompTableau::new(comp(&[1, 1]), vec![vec![2], vec![2]]).is_err());
        // Triple rule, first case: rows 2,2 with T(2,2) = T(1,2) and
        // T(1,1) >= T(2,2).
        assert!(CompTableau::new(comp(&[2, 2]), vec![vec![2, 2], vec![3, 2]]).is_err());
        // Triple rule, second case: shorter row above a longer one.
        assert!(CompTableau::new(comp(&[1, 2]), vec![vec![2], vec![3, 1]]).is_err());
        assert!(CompTableau::new(comp(&[1, 2]), vec![vec![2], vec![3, 2]]).is_err());
        // Same shape, valid: T(1,1) < T(2,2).
        assert!(CompTableau::new(comp(&[1, 2]), vec![vec![2], vec![3, 3]]).is_ok());
        // Shape mismatch and zero entries.
        assert!(CompTableau::new(comp(&[2]), vec![vec![1]]).is_err());
        assert!(CompTableau::new(comp(&[1]), vec![vec![0]]).is_err());
    }

    #[test]
    fn sct_enumeration_and_descents() {
        // Exactly two standard composition tableaux of shape 13.
        let got = enumerate_sct(&comp(&[1, 3])).unwrap();
        assert_eq!(got.len(), 2);
        let descents: Vec<Composition> =
            got.iter().map(|t| sct_des_comp(t).unwrap()).collect();
        let rows: Vec<&[Vec<usize>]> = got.iter().map(|t| t.rows()).collect();
        assert!(rows.contains(&&[vec![1], vec![4, 3, 2]][..]));
        assert!(rows.contains(&&[vec![2], vec![4, 3, 1]][..]));
        assert!(descents.contains(&comp(&[1, 3])));
        assert!(descents.contains(&comp(&[2, 2])));

        // 17-cell descent example.
        let t = ctab(
            &[5, 2, 6, 4],
            &[
                &[8, 5, 4, 2, 1],
                &[9, 3],
                &[15, 12, 11, 10, 7, 6],
                &[17, 16, 14, 13],
            ],
        );
        assert_eq!(sct_des_set(&t).unwrap(), vec![3, 5, 8, 9, 12, 15]);
        assert_eq!(sct_des_comp(&t).unwrap(), comp(&[3, 2, 3, 1, 3, 3, 2]));
    }

    #[test]
    fn ssct_refine_schur() {
        // Summing SSCT counts over shapes sorting to a partition gives the
        // Kostka numbers: here sort(alpha) = (2,1), content (1,1,1).
        let c111 = comp(&[1, 1, 1]);
        let total: usize = [comp(&[2, 1]), comp(&[1, 2])]
            .iter()
            .map(|a| enumerate_ssct(a, &c111).unwrap().len())
            .sum();
        assert_eq!(total, 2);
    }

    #[test]
    fn ascent_statistics() {
        let t = ctab(
            &[5, 2, 7, 4],
            &[
                &[2, 2, 2, 1, 1],
                &[4, 3],
                &[7, 5, 5, 5, 3, 3, 1],
                &[8, 8, 6, 6],
            ],
        );
        assert_eq!(ssct_asc_set(&t), vec![1, 3, 6]);
        assert_eq!(ssct_sum_asc(&t), 10);
    }

    #[test]
    fn refine_relabel_reference_example() {
        let t = ctab(
            &[5, 2, 7, 4],
            &[
                &[6, 5, 4, 3, 2],
                &[10, 9],
                &[16, 13, 12, 11, 8, 7, 1],
                &[18, 17, 15, 14],
            ],
        );
        assert_eq!(
            sct_des_comp(&t).unwrap(),
            comp(&[6, 4, 3, 3, 2]),
        );
        let beta = comp(&[3, 3, 3, 1, 3, 2, 1, 2]);
        let got = refine_relabel(&t, &beta).unwrap();
        assert_eq!(
            got.rows(),
            &[
                vec![2, 2, 2, 1, 1],
                vec![4, 3],
                vec![7, 5, 5, 5, 3, 3, 1],
                vec![8, 8, 6, 6],
            ]
        );
        assert_eq!(ssct_sum_asc(&got), 10);
        assert_eq!(unrefine(&got).unwrap(), t);

        // A composition that does not refine the descents is rejected.
        assert!(refine_relabel(&t, &comp(&[9, 9])).is_err());
    }

    #[test]
    fn refine_relabel_bijection_small() {
        // For every shape of size 4 and every content beta, the semistandard
        // composition tableaux are exactly the relabelings of pairs
        // (standard tableau, beta refining its descents), and ascent sums
        // match the refinement statistic.
        use crate::indexset::g_stat;
        for alpha in compositions_of(4) {
            let scts = enumerate_sct(&alpha).unwrap();
            for beta in compositions_of(4) {
                let mut expected: Vec<(CompTableau, usize)> = Vec::new();
                for t in &scts {
                    let gamma = sct_des_comp(t).unwrap();
                    if is_finer(&beta, &gamma).unwrap() {
                        let relabeled = refine_relabel(t, &beta).unwrap();
                        expected.push((relabeled, g_stat(&gamma, &beta).unwrap()));
                    }
                }
                let direct = enumerate_ssct(&alpha, &beta).unwrap();
                assert_eq!(direct.len(), expected.len(), "alpha {alpha} beta {beta}");
                for t in &direct {
                    let hit = expected.iter().find(|(u, _)| u == t);
                    assert!(hit.is_some(), "missing {t:?}");
                    assert_eq!(hit.unwrap().1, ssct_sum_asc(t), "ascent sum for {t:?}");
                    // Round trip through the inverse.
                    let back = unrefine(t).unwrap();
                    assert_eq!(refine_relabel(&back, &beta).unwrap(), *t);
                }
            }
        }
    }

    #[test]
    fn standard_checks() {
        let t = ctab(&[1, 3], &[&[1], &[4, 3, 2]]);
        assert!(t.is_standard());
        assert_eq!(t.cell_of(3), Some((2, 2)));
        let u = ctab(&[2], &[&[1, 1]]);
        assert!(!u.is_standard());
        assert!(sct_des_set(&u).is_err());
        assert_eq!(u.content_composition().unwrap(), comp(&[2]));
    }
}
