//! Transition matrices among the symmetric bases (monomial, Schur, and the
//! two Hall-Littlewood families) and the quasisymmetric bases (monomial,
//! fundamental, quasisymmetric Hall-Littlewood, quasisymmetric Schur, peak),
//! plus quasisymmetric expansions of skew Hall-Littlewood functions. All
//! entries live in Z[t].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::ctab::{enumerate_sct, enumerate_ssct, sct_des_comp, ssct_sum_asc};
use crate::error::{Error, Result};
use crate::indexset::{
    bre, compositions_of, g_stat, is_finer, k_poly, partitions_of, parts_label, peak_compositions,
    s_stat, xi_values, Cell, Composition, Partition, SkewShape,
};
use crate::kernels::{charge_tableau, srht_entry, tournament_entry};
use crate::tableaux::{
    des_set, enumerate_ssyt, enumerate_syt, espec_cells, phi_poly, psi_poly, qspecial_cells,
    special_cells, StarVariant, Tableau,
};
use crate::tpoly::TPoly;

/// The nine supported bases. Symmetric bases are indexed by partitions,
/// quasisymmetric bases by compositions, and the peak basis by compositions
/// with no interior part 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    /// Monomial symmetric functions, code `m`.
    #[serde(rename = "m")]
    Monomial,
    /// Schur functions, code `s`.
    #[serde(rename = "s")]
    Schur,
    /// Hall-Littlewood P functions, code `P`.
    #[serde(rename = "P")]
    HallLittlewoodP,
    /// Hall-Littlewood Q functions, code `Q`.
    #[serde(rename = "Q")]
    HallLittlewoodQ,
    /// Monomial quasisymmetric functions, code `M`.
    #[serde(rename = "M")]
    QuasiMonomial,
    /// Fundamental quasisymmetric functions, code `F`.
    #[serde(rename = "F")]
    Fundamental,
    /// Quasisymmetric Hall-Littlewood functions, code `G`.
    #[serde(rename = "G")]
    QuasiHallLittlewood,
    /// Quasisymmetric Schur functions, code `S`.
    #[serde(rename = "S")]
    QuasiSchur,
    /// Peak functions, code `K`.
    #[serde(rename = "K")]
    Peak,
}

/// What a basis is indexed by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexKind {
    Partitions,
    Compositions,
    PeakCompositions,
}

impl Basis {
    pub const ALL: [Basis; 9] = [
        Basis::Monomial,
        Basis::Schur,
        Basis::HallLittlewoodP,
        Basis::HallLittlewoodQ,
        Basis::QuasiMonomial,
        Basis::Fundamental,
        Basis::QuasiHallLittlewood,
        Basis::QuasiSchur,
        Basis::Peak,
    ];

    /// One-letter code used on the command line and in serialized matrices.
    pub fn code(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Schur => "s",
            Basis::HallLittlewoodP => "P",
            Basis::HallLittlewoodQ => "Q",
            Basis::QuasiMonomial => "M",
            Basis::Fundamental => "F",
            Basis::QuasiHallLittlewood => "G",
            Basis::QuasiSchur => "S",
            Basis::Peak => "K",
        }
    }

    pub fn index_kind(self) -> IndexKind {
        match self {
            Basis::Monomial | Basis::Schur | Basis::HallLittlewoodP | Basis::HallLittlewoodQ => {
                IndexKind::Partitions
            }
            Basis::QuasiMonomial
            | Basis::Fundamental
            | Basis::QuasiHallLittlewood
            | Basis::QuasiSchur => IndexKind::Compositions,
            Basis::Peak => IndexKind::PeakCompositions,
        }
    }

    pub fn is_symmetric(self) -> bool {
        self.index_kind() == IndexKind::Partitions
    }

    /// The index set of the degree-n slice of the basis, in canonical order.
    pub fn indices(self, n: usize) -> Vec<Vec<usize>> {
        match self.index_kind() {
            IndexKind::Partitions => partitions_of(n)
                .into_iter()
                .map(|p| p.parts().to_vec())
                .collect(),
            IndexKind::Compositions => compositions_of(n)
                .into_iter()
                .map(|c| c.parts().to_vec())
                .collect(),
            IndexKind::PeakCompositions => peak_compositions(n)
                .into_iter()
                .map(|c| c.parts().to_vec())
                .collect(),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Basis::ALL
            .into_iter()
            .find(|b| b.code() == s)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown basis \"{s}\" (expected one of m, s, P, Q, M, F, G, S, K)"
                ))
            })
    }
}

/// Knobs for matrix construction. Defaults give the fastest correct build.
#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    /// Skip a tableau's term as soon as one of its factors is identically
    /// zero, instead of multiplying the zero through. Same result either way.
    pub early_exit: bool,
    /// Lift the size guard on the signed binary-matrix expansion behind the
    /// Hall-Littlewood-to-Schur entries (exponential in the number of rows).
    pub force: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            early_exit: true,
            force: false,
        }
    }
}

/// A transition matrix: entry at (row i, col j) is the coefficient of the
/// `to`-basis element indexed by `cols[j]` in the expansion of the
/// `from`-basis element indexed by `rows[i]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransitionMatrix {
    pub from: Basis,
    pub to: Basis,
    pub n: usize,
    pub rows: Vec<Vec<usize>>,
    pub cols: Vec<Vec<usize>>,
    pub entries: Vec<Vec<TPoly>>,
}

impl TransitionMatrix {
    /// Looks up the entry for a (row index, column index) pair of labels.
    pub fn entry(&self, row: &[usize], col: &[usize]) -> Option<&TPoly> {
        let i = self.rows.iter().position(|r| r == row)?;
        let j = self.cols.iter().position(|c| c == col)?;
        Some(&self.entries[i][j])
    }

    /// Matrix product; the inner index sets must agree.
    pub fn multiply(&self, other: &TransitionMatrix) -> Result<TransitionMatrix> {
        if self.to != other.from || self.cols != other.rows {
            return Err(Error::Invalid(format!(
                "cannot multiply M({},{}) by M({},{}): inner index sets differ",
                self.from, self.to, other.from, other.to
            )));
        }
        let entries = self
            .entries
            .iter()
            .map(|lrow| {
                (0..other.cols.len())
                    .map(|j| {
                        let mut acc = TPoly::zero();
                        for (k, lv) in lrow.iter().enumerate() {
                            if !lv.is_zero() && !other.entries[k][j].is_zero() {
                                acc = &acc + &(lv * &other.entries[k][j]);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Ok(TransitionMatrix {
            from: self.from,
            to: other.to,
            n: self.n,
            rows: self.rows.clone(),
            cols: other.cols.clone(),
            entries,
        })
    }

    /// Square matrix with ones on the diagonal and zeros elsewhere?
    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.entries.iter().enumerate().all(|(i, row)| {
                row.iter()
                    .enumerate()
                    .all(|(j, e)| if i == j { e.is_one() } else { e.is_zero() })
            })
    }

    /// Evaluates every entry at t = 0 or t = 1.
    pub fn specialize(&self, value: u8) -> Result<Vec<Vec<BigInt>>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| e.specialize01(value)).collect())
            .collect()
    }

    /// Plain-text table with aligned columns.
    pub fn to_text(&self) -> String {
        let col_labels: Vec<String> = self.cols.iter().map(|c| parts_label(c)).collect();
        let row_labels: Vec<String> = self.rows.iter().map(|r| parts_label(r)).collect();
        let rendered: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.to_string()).collect())
            .collect();
        let mut widths: Vec<usize> = col_labels.iter().map(|l| l.len()).collect();
        for row in &rendered {
            for (j, cell) in row.iter().enumerate() {
                widths[j] = widths[j].max(cell.len());
            }
        }
        let label_width = row_labels.iter().map(|l| l.len()).max().unwrap_or(0);
        let mut out = format!("M({},{}), n = {}\n", self.from, self.to, self.n);
        out.push_str(&" ".repeat(label_width));
        for (j, l) in col_labels.iter().enumerate() {
            out.push_str("  ");
            out.push_str(&format!("{l:>w$}", w = widths[j]));
        }
        out.push('\n');
        for (i, row) in rendered.iter().enumerate() {
            out.push_str(&format!("{:<label_width$}", row_labels[i]));
            for (j, cell) in row.iter().enumerate() {
                out.push_str("  ");
                out.push_str(&format!("{cell:>w$}", w = widths[j]));
            }
            out.push('\n');
        }
        out
    }

    /// LaTeX bordermatrix with the index labels on the border.
    pub fn to_latex(&self) -> String {
        let mut out = format!("M({},{}) = \\bordermatrix{{\n", self.from, self.to);
        out.push(' ');
        for c in &self.cols {
            out.push_str(" & ");
            out.push_str(&parts_label(c));
        }
        out.push_str(" \\cr\n");
        for (i, row) in self.entries.iter().enumerate() {
            out.push_str(&parts_label(&self.rows[i]));
            for e in row {
                out.push_str(" & ");
                out.push_str(&e.latex());
            }
            out.push_str(" \\cr\n");
        }
        out.push('}');
        out
    }
}

/// Builds the transition matrix expanding the `from` basis in the `to` basis
/// for total degree n.
pub fn transition_matrix(
    from: Basis,
    to: Basis,
    n: usize,
    opts: &BuildOptions,
) -> Result<TransitionMatrix> {
    use Basis::*;
    let entries = match (from, to) {
        (Schur, Monomial) => rows_schur_monomial(n)?,
        (Schur, Fundamental) => rows_schur_fundamental(n)?,
        (Schur, HallLittlewoodP) => rows_schur_hlp(n)?,
        (Monomial, Schur) => rows_monomial_schur(n)?,
        (Monomial, QuasiMonomial) => rows_monomial_qmonomial(n)?,
        (HallLittlewoodP, Monomial) => rows_hlp_monomial(n)?,
        (HallLittlewoodP, Schur) => rows_hlp_schur(n, opts.force)?,
        (HallLittlewoodP, Fundamental) => rows_starred_fundamental(n, StarVariant::P)?,
        (HallLittlewoodP, QuasiHallLittlewood) => rows_hlp_qhl(n, opts.early_exit)?,
        (HallLittlewoodQ, Fundamental) => rows_starred_fundamental(n, StarVariant::Q)?,
        (Fundamental, QuasiMonomial) => rows_fundamental_qmonomial(n)?,
        (Fundamental, QuasiHallLittlewood) => rows_fundamental_qhl(n)?,
        (QuasiMonomial, Fundamental) => rows_qmonomial_fundamental(n)?,
        (QuasiMonomial, QuasiHallLittlewood) => rows_qmonomial_qhl(n)?,
        (QuasiHallLittlewood, Fundamental) => rows_qhl_fundamental(n)?,
        (QuasiHallLittlewood, QuasiMonomial) => rows_qhl_qmonomial(n)?,
        (QuasiSchur, Fundamental) => rows_qschur_fundamental(n)?,
        (QuasiSchur, QuasiMonomial) => rows_qschur_qmonomial(n)?,
        (QuasiSchur, QuasiHallLittlewood) => rows_qschur_qhl(n)?,
        (Peak, Fundamental) => rows_peak_fundamental(n)?,
        (Peak, QuasiMonomial) => rows_peak_qmonomial(n)?,
        (Peak, QuasiHallLittlewood) => rows_peak_qhl(n)?,
        _ => {
            return Err(Error::Invalid(format!(
                "no direct construction for M({from},{to})"
            )))
        }
    };
    Ok(TransitionMatrix {
        from,
        to,
        n,
        rows: from.indices(n),
        cols: to.indices(n),
        entries,
    })
}

/// phi(r) = (1 - t)(1 - t^2)...(1 - t^r), the t-analogue of r!.
pub fn phi_factorial(r: usize) -> TPoly {
    let mut prod = TPoly::one();
    for i in 1..=r {
        prod = &prod * &TPoly::one_minus_t_pow(i);
    }
    prod
}

/// b(lambda) = product of phi over the part multiplicities; the factor
/// relating the P and Q Hall-Littlewood functions.
pub fn b_partition(lambda: &Partition) -> TPoly {
    let mut prod = TPoly::one();
    let mut seen = BTreeSet::new();
    for &p in lambda.parts() {
        if seen.insert(p) {
            prod = &prod * &phi_factorial(lambda.multiplicity(p));
        }
    }
    prod
}

/// A quasisymmetric expansion of one skew function: coefficient of each
/// `to`-basis element, indexed by compositions in canonical order with zero
/// terms dropped.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expansion {
    pub from: Basis,
    pub to: Basis,
    pub shape: SkewShape,
    pub n: usize,
    pub terms: Vec<ExpansionTerm>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpansionTerm {
    pub index: Vec<usize>,
    pub coeff: TPoly,
}

impl Expansion {
    /// Coefficient of the given index (zero if absent).
    pub fn coeff(&self, index: &[usize]) -> TPoly {
        self.terms
            .iter()
            .find(|t| t.index == index)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(TPoly::zero)
    }

    /// One-line rendering such as `P[21] = (1)*F[21] + (1)*F[12] + (-t - t^2)*F[111]`.
    pub fn to_text(&self) -> String {
        let lhs = format!("{}[{}]", self.from, self.shape);
        if self.terms.is_empty() {
            return format!("{lhs} = 0");
        }
        let rhs = self
            .terms
            .iter()
            .map(|t| format!("({})*{}[{}]", t.coeff, self.to, parts_label(&t.index)))
            .collect::<Vec<_>>()
            .join(" + ");
        format!("{lhs} = {rhs}")
    }
}

/// Expands a skew Hall-Littlewood function (P or Q family) in the fundamental
/// or monomial quasisymmetric basis.
pub fn expand_skew(from: Basis, shape: &SkewShape, to: Basis) -> Result<Expansion> {
    let n = shape.n_cells();
    let map = match (from, to) {
        (Basis::HallLittlewoodP, Basis::Fundamental) => starred_f_terms(shape, StarVariant::P)?,
        (Basis::HallLittlewoodQ, Basis::Fundamental) => starred_f_terms(shape, StarVariant::Q)?,
        (Basis::HallLittlewoodP, Basis::QuasiMonomial) => monomial_terms(shape, psi_poly)?,
        (Basis::HallLittlewoodQ, Basis::QuasiMonomial) => monomial_terms(shape, phi_poly)?,
        _ => {
            return Err(Error::Invalid(format!(
                "expansion is supported from P or Q into F or M, not {from} into {to}"
            )))
        }
    };
    let terms = compositions_of(n)
        .into_iter()
        .filter_map(|c| {
            map.get(c.parts()).and_then(|p| {
                (!p.is_zero()).then(|| ExpansionTerm {
                    index: c.parts().to_vec(),
                    coeff: p.clone(),
                })
            })
        })
        .collect();
    Ok(Expansion {
        from,
        to,
        shape: shape.clone(),
        n,
        terms,
    })
}

// ---------------------------------------------------------------------------
// Row builders. Each returns the full entry grid in canonical index order.
// ---------------------------------------------------------------------------

fn partition_pairs(
    n: usize,
    f: impl Fn(&Partition, &Partition) -> Result<TPoly>,
) -> Result<Vec<Vec<TPoly>>> {
    let index = partitions_of(n);
    index
        .iter()
        .map(|lam| index.iter().map(|mu| f(lam, mu)).collect())
        .collect()
}

fn composition_pairs(
    rows: &[Composition],
    cols: &[Composition],
    f: impl Fn(&Composition, &Composition) -> Result<TPoly>,
) -> Result<Vec<Vec<TPoly>>> {
    rows.iter()
        .map(|alpha| cols.iter().map(|beta| f(alpha, beta)).collect())
        .collect()
}

fn col_positions(cols: &[Composition]) -> BTreeMap<Vec<usize>, usize> {
    cols.iter()
        .enumerate()
        .map(|(j, c)| (c.parts().to_vec(), j))
        .collect()
}

/// Number of column-strict fillings of the straight shape lambda with content
/// mu (the Kostka numbers).
fn rows_schur_monomial(n: usize) -> Result<Vec<Vec<TPoly>>> {
    partition_pairs(n, |lam, mu| {
        let shape = SkewShape::straight(lam.clone());
        let count = enumerate_ssyt(&shape, mu.len(), Some(&mu.to_composition()))?.len();
        Ok(TPoly::constant(count as i64))
    })
}

/// Standard tableaux of shape lambda bucketed by descent composition.
fn rows_schur_fundamental(n: usize) -> Result<Vec<Vec<TPoly>>> {
    let cols = compositions_of(n);
    let pos = col_positions(&cols);
    partitions_of(n)
        .iter()
        .map(|lam| {
            let mut row = vec![TPoly::zero(); cols.len()];
            for t in enumerate_syt(&SkewShape::straight(lam.clone()))? {
                let comp = Composition::from_sub(&des_set(&t)?, n)?;
                let j = pos[comp.parts()];
                row[j] = &row[j] + &TPoly::one();
            }
            Ok(row)
        })
        .collect()
}

/// Charge generating function over column-strict fillings of shape lambda
/// with content mu.
fn rows_schur_hlp(n: usize) -> Result<Vec<Vec<TPoly>>> {
    partition_pairs(n, |lam, mu| {
        let shape = SkewShape::straight(lam.clone());
        let mut acc = TPoly::zero();
        for t in enumerate_ssyt(&shape, mu.len(), Some(&mu.to_composition()))? {
            acc = &acc + &TPoly::monomial(1, charge_tableau(&t)?);
        }
        Ok(acc)
    })
}

/// Signed counts of special rim hook dissections: the inverse Kostka matrix.
fn rows_monomial_schur(n: usize) -> Result<Vec<Vec<TPoly>>> {
    partition_pairs(n, |lam, mu| Ok(TPoly::constant(srht_entry(lam, mu))))
}

/// A monomial symmetric function is the sum of the quasisymmetric monomials
/// over all rearrangements of its index.
fn rows_monomial_qmonomial(n: usize) -> Result<Vec<Vec<TPoly>>> {
    let cols = compositions_of(n);
    partitions_of(n)
        .iter()
        .map(|lam| {
            Ok(cols
                .iter()
                .map(|beta| {
                    if &beta.sorted() == lam {
                        TPoly::one()
                    } else {
                        TPoly::zero()
                    }
                })
                .collect())
        })
        .collect()
}

/// Sum of the cell-weight products over column-strict fillings of shape
/// lambda with content mu.
fn rows_hlp_monomial(n: usize) -> Result<Vec<Vec<TPoly>>> {
    partition_pairs(n, |lam, mu| {
        let shape = SkewShape::straight(lam.clone());
        let mut acc = TPoly::zero();
        for t in enumerate_ssyt(&shape, mu.len(), Some(&mu.to_composition()))? {
            acc = &acc + &psi_poly(&t);
        }
        Ok(acc)
    })
}

/// Signed (-t)-weight sums over the binary matrices with prescribed row sums.
fn rows_hlp_schur(n: usize, force: bool) -> Result<Vec<Vec<TPoly>>> {
    partition_pairs(n, |lam, mu| tournament_entry(lam, mu, force))
}

/// Shared by the P and Q expansions into the fundamental basis: signed
/// t-weight sums over starred standard fillings, bucketed by ascent
/// composition.
fn rows_starred_fundamental(n: usize, variant: StarVariant) -> Result<Vec<Vec<TPoly>>> {
    let cols = compositions_of(n);
    let pos = col_positions(&cols);
    partitions_of(n)
        .iter()
        .map(|lam| {
            let shape = SkewShape::straight(lam.clone());
            let mut row = vec![TPoly::zero(); cols.len()];
            for (parts, coeff) in starred_f_terms(&shape, variant)? {
                let j = pos[&parts];
                row[j] = &row[j] + &coeff;
            }
            Ok(row)
        })
        .collect()
}

/// Signed t-weight expansion of one skew shape over starred standard
/// fillings, keyed by ascent composition. Subsets of the starrable cells are
/// walked in Gray-code order so each step toggles a single star.
fn starred_f_terms(
    shape: &SkewShape,
    variant: StarVariant,
) -> Result<BTreeMap<Vec<usize>, TPoly>> {
    let n = shape.n_cells();
    let mut acc: BTreeMap<Vec<usize>, TPoly> = BTreeMap::new();
    for t in enumerate_syt(shape)? {
        // positions[v-1] = cell of v
        let mut positions = vec![(0usize, 0usize); n];
        for c in shape.cells() {
            positions[t.get(c).unwrap() - 1] = c;
        }
        let des = des_set(&t)?;
        let starrable: Vec<(Cell, usize)> = match variant {
            StarVariant::P => special_cells(&t),
            StarVariant::Q => qspecial_cells(&t),
        };
        if starrable.len() >= usize::BITS as usize - 1 {
            return Err(Error::CapExceeded(format!(
                "too many starrable cells ({}) in shape {}",
                starrable.len(),
                shape
            )));
        }
        // Starring a cell switches on at most one extra ascent.
        let switched: Vec<Option<usize>> = starrable
            .iter()
            .map(|&(c, _)| {
                let v = t.get(c).unwrap();
                match variant {
                    StarVariant::P => (v >= 2 && positions[v - 2].1 + 1 == c.1).then(|| v - 1),
                    StarVariant::Q => (v < n && positions[v].1 == c.1 + 1).then_some(v),
                }
            })
            .collect();
        let mut starred = vec![false; starrable.len()];
        let mut extra: BTreeSet<usize> = BTreeSet::new();
        let mut weight = 0usize;
        let mut negative = false;
        let subsets: usize = 1 << starrable.len();
        for step in 0..subsets {
            let mut asc: Vec<usize> = des.clone();
            asc.extend(extra.iter().copied());
            asc.sort_unstable();
            asc.dedup();
            let comp = Composition::from_sub(&asc, n)?;
            let term = TPoly::monomial(if negative { -1 } else { 1 }, weight);
            let slot = acc.entry(comp.parts().to_vec()).or_insert_with(TPoly::zero);
            *slot = &*slot + &term;
            if step + 1 < subsets {
                let b = (step + 1).trailing_zeros() as usize;
                negative = !negative;
                if starred[b] {
                    weight -= starrable[b].1;
                    if let Some(k) = switched[b] {
                        extra.remove(&k);
                    }
                } else {
                    weight += starrable[b].1;
                    if let Some(k) = switched[b] {
                        extra.insert(k);
                    }
                }
                starred[b] = !starred[b];
            }
        }
    }
    acc.retain(|_, p| !p.is_zero());
    Ok(acc)
}

/// Coefficient of each quasisymmetric monomial: the weight-product sum over
/// column-strict fillings with the composition as content.
fn monomial_terms(
    shape: &SkewShape,
    weight_of: impl Fn(&Tableau) -> TPoly,
) -> Result<BTreeMap<Vec<usize>, TPoly>> {
    let n = shape.n_cells();
    let mut acc = BTreeMap::new();
    for alpha in compositions_of(n) {
        let mut total = TPoly::zero();
        for t in enumerate_ssyt(shape, alpha.len(), Some(&alpha))? {
            total = &total + &weight_of(&t);
        }
        if !total.is_zero() {
            acc.insert(alpha.parts().to_vec(), total);
        }
    }
    Ok(acc)
}

/// Direct expansion of a Hall-Littlewood P row in the quasisymmetric
/// Hall-Littlewood basis: one term per standard tableau whose descents all
/// lie in the column's partial-sum set, with one factor per special cell.
fn rows_hlp_qhl(n: usize, early_exit: bool) -> Result<Vec<Vec<TPoly>>> {
    let cols = compositions_of(n);
    struct TabInfo {
        des: Vec<usize>,
        // index k-1 holds data for the cell of k+1 when that cell is special:
        // (weight, switches the ascent set when starred?)
        cell: Vec<Option<(usize, bool)>>,
    }
    partitions_of(n)
        .iter()
        .map(|lam| {
            let shape = SkewShape::straight(lam.clone());
            let infos: Vec<TabInfo> = enumerate_syt(&shape)?
                .into_iter()
                .map(|t| {
                    let mut positions = vec![(0usize, 0usize); n];
                    for c in shape.cells() {
                        positions[t.get(c).unwrap() - 1] = c;
                    }
                    let weights: BTreeMap<Cell, usize> = special_cells(&t).into_iter().collect();
                    let switching: BTreeSet<Cell> = espec_cells(&t)?.into_iter().collect();
                    let cell = (1..n)
                        .map(|k| {
                            let c = positions[k];
                            weights.get(&c).map(|&w| (w, switching.contains(&c)))
                        })
                        .collect();
                    Ok(TabInfo {
                        des: des_set(&t)?,
                        cell,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let row = cols
                .iter()
                .map(|beta| {
                    let sub: BTreeSet<usize> = beta.sub().into_iter().collect();
                    // before[k] = how many elements of the partial-sum set are <= k
                    let mut before = vec![0usize; n + 1];
                    for k in 1..=n {
                        before[k] = before[k - 1] + usize::from(sub.contains(&k));
                    }
                    let mut total = TPoly::zero();
                    'tableaux: for info in &infos {
                        if !info.des.iter().all(|d| sub.contains(d)) {
                            continue;
                        }
                        let mut prod = TPoly::one();
                        for k in 1..n {
                            let Some((wt, switches)) = info.cell[k - 1] else {
                                continue;
                            };
                            let in_sub = sub.contains(&k);
                            let factor = if switches {
                                if !in_sub {
                                    continue; // factor 1
                                }
                                if before[k] == wt && early_exit {
                                    continue 'tableaux; // identically zero term
                                }
                                &TPoly::monomial(1, before[k]) - &TPoly::monomial(1, wt)
                            } else {
                                // A starred cell that switches nothing scales by
                                // t^(elements before it) unless k is a descent
                                // or lies outside the set.
                                let shift = if in_sub && !info.des.contains(&k) {
                                    before[k]
                                } else {
                                    0
                                };
                                &TPoly::monomial(1, shift) * &TPoly::one_minus_t_pow(wt)
                            };
                            prod = &prod * &factor;
                        }
                        total = &total + &prod;
                    }
                    total
                })
                .collect();
            Ok(row)
        })
        .collect()
}

/// A fundamental is the sum of the quasisymmetric monomials over refinements.
fn rows_fundamental_qmonomial(n: usize) -> Result<Vec<Vec<TPoly>>> {
    let index = compositions_of(n);
    composition_pairs(&index, &index, |alpha, beta| {
        Ok(if is_finer(beta, alpha)? {
            TPoly::one()
        } else {
            TPoly::zero()
        })
    })
}

/// t-power over refinements, exponent summing the split positions.
fn rows_fundamental_qhl(n: usize) -> Result<Vec<Vec<TPoly>>> {
    let index = compositions_of(n);
    composition_pairs(&index, &index, |alpha, beta| {
        Ok(if is_finer(beta, alpha)? {
            TPoly::monomial(1, g_stat(alpha, beta)?)
        } else {
            TPoly::zero()
        })
    })
}

fn refinement_sign(alpha: &Composition, beta: &Composition) -> i64 {
    if (beta.len() - alpha.len()) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Signed refinement indicator: inverse of the fundamental-to-monomial matrix.
fn rows_qmonomial_fundamental(n: usize) -> Result<Vec<Vec<TPoly>>> {
    let index = compositions_of(n);
    composition_pairs(&index, &index, |alpha, beta| {
        Ok(if is_finer(beta, alpha)? {
            TPoly::constant(refinement_sign(alpha, beta))
        } else {
            TPoly::zero()
        })
    })
}

/// Signed product of (1 - t^j) over the interior split positions.
fn rows_qmonomial_qhl(n: usize) -> Result<Vec<Vec<TPoly>>> {
    let index = compositions_of(n);
    composition_pairs(&index, &index, |alpha, beta| {
        if !is_finer(beta, alpha)? {
            return Ok(TPoly::zero());
        }
        let mut prod = TPoly::constant(refinement_sign(alpha, beta));
        for xi in xi_values(alpha, beta)? {
            if xi != 0 {
                prod = &prod * &TPoly::one_minus_t_pow(xi);
            }
        }
        Ok(prod)
    })
}

/// Signed t-power over refinements; inverse of the fundamental expansion.
fn rows_qhl_fundamental(n: usize) -> Result<Vec<Vec<TPoly>>> {
    let index = compositions_of(n);
    composition_pairs(&index, &index, |alpha, beta| {
        if !is_finer(beta, alpha)? {
            return Ok(TPoly::zero());
        }
        let sign = refinement_sign(alpha, beta);
        Ok(TPoly::monomial(sign, s_stat(alpha, beta)?))
    })
}

/// Product of (1 - t^i) powers recording how many extra pieces each part of
/// alpha splits into.
fn rows_qhl_qmonomial(n: usize) -> Result<Vec<Vec<TPoly>>> {
    let index = compositions_of(n);
    composition_pairs(&index, &index, |alpha, beta| {
        if !is_finer(beta, alpha)? {
            return Ok(TPoly::zero());
        }
        let mut prod = TPoly::one();
        for (i, &c) in bre(beta, alpha)?.parts().iter().enumerate() {
            for _ in 1..c {
                prod = &prod * &TPoly::one_minus_t_pow(i + 1);
            }
        }
        Ok(prod)
    })
}

/// Standard composition tableaux bucketed by descent composition.
fn rows_qschur_fundamental(n: usize) -> Result<Vec<Vec<TPoly>>> {
    let cols = compositions_of(n);
    let pos = col_positions(&cols);
    cols.iter()
        .map(|alpha| {
            let mut row = vec![TPoly::zero(); cols.len()];
            for t in enumerate_sct(alpha)? {
                let j = pos[sct_des_comp(&t)?.parts()];
                row[j] = &row[j] + &TPoly::one();
            }
            Ok(row)
        })
        .collect()
}

/// Counts of semistandard composition tableaux by content.
fn rows_qschur_qmonomial(n: usize) -> Result<Vec<Vec<TPoly>>> {
    let index = compositions_of(n);
    composition_pairs(&index, &index, |alpha, beta| {
        Ok(TPoly::constant(enumerate_ssct(alpha, beta)?.len() as i64))
    })
}

/// Ascent-sum generating function over semistandard composition tableaux.
fn rows_qschur_qhl(n: usize) -> Result<Vec<Vec<TPoly>>> {
    let index = compositions_of(n);
    composition_pairs(&index, &index, |alpha, beta| {
        let mut acc = TPoly::zero();
        for t in enumerate_ssct(alpha, beta)? {
            acc = &acc + &TPoly::monomial(1, ssct_sum_asc(&t));
        }
        Ok(acc)
    })
}

/// Indicator that sub(alpha) lies in the symmetric difference of sub(beta)
/// and its right shift.
fn rows_peak_fundamental(n: usize) -> Result<Vec<Vec<TPoly>>> {
    let rows = peak_compositions(n);
    let cols = compositions_of(n);
    composition_pairs(&rows, &cols, |alpha, beta| {
        let b: BTreeSet<usize> = beta.sub().into_iter().collect();
        let inside = alpha
            .sub()
            .into_iter()
            .all(|a| b.contains(&a) != (a >= 1 && b.contains(&(a - 1))));
        Ok(if inside { TPoly::one() } else { TPoly::zero() })
    })
}

/// Power of two over pairs where sub(alpha) lies in sub(beta) union its
/// right shift.
fn rows_peak_qmonomial(n: usize) -> Result<Vec<Vec<TPoly>>> {
    let rows = peak_compositions(n);
    let cols = compositions_of(n);
    composition_pairs(&rows, &cols, |alpha, beta| {
        let b: BTreeSet<usize> = beta.sub().into_iter().collect();
        let inside = alpha
            .sub()
            .into_iter()
            .all(|a| b.contains(&a) || (a >= 1 && b.contains(&(a - 1))));
        if !inside {
            return Ok(TPoly::zero());
        }
        let mut pow = TPoly::one();
        for _ in 0..(beta.len() - alpha.len()) {
            pow = &pow * &TPoly::constant(2);
        }
        Ok(pow)
    })
}

/// The k-polynomial pairing of a peak composition with each composition.
fn rows_peak_qhl(n: usize) -> Result<Vec<Vec<TPoly>>> {
    let rows = peak_compositions(n);
    let cols = compositions_of(n);
    composition_pairs(&rows, &cols, k_poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(from: Basis, to: Basis, n: usize) -> TransitionMatrix {
        transition_matrix(from, to, n, &BuildOptions::default()).unwrap()
    }

    fn row_of(m: &TransitionMatrix, row: &[usize]) -> Vec<String> {
        let i = m.rows.iter().position(|r| r == row).unwrap();
        m.entries[i].iter().map(|e| e.to_string()).collect()
    }

    #[test]
    fn basis_codes_round_trip() {
        for b in Basis::ALL {
            assert_eq!(b.code().parse::<Basis>().unwrap(), b);
        }
        assert!("x".parse::<Basis>().is_err());
        assert_eq!(
            serde_json::to_string(&Basis::HallLittlewoodP).unwrap(),
            "\"P\""
        );
        assert_eq!(
            serde_json::from_str::<Basis>("\"K\"").unwrap(),
            Basis::Peak
        );
    }

    #[test]
    fn index_sets_follow_basis_kind() {
        let m = build(Basis::Peak, Basis::QuasiHallLittlewood, 4);
        assert_eq!(m.rows, vec![vec![4], vec![3, 1], vec![2, 2]]);
        assert_eq!(m.cols.len(), 8);
        let sm = build(Basis::Schur, Basis::Monomial, 4);
        assert_eq!(sm.rows.len(), 5);
        assert_eq!(sm.rows[3], vec![2, 1, 1]);
        assert_eq!(sm.rows, sm.cols);
    }

    #[test]
    fn kostka_and_inverse_multiply_to_identity() {
        for n in 0..=5 {
            let a = build(Basis::Schur, Basis::Monomial, n);
            let b = build(Basis::Monomial, Basis::Schur, n);
            assert!(a.multiply(&b).unwrap().is_identity(), "n = {n}");
            assert!(b.multiply(&a).unwrap().is_identity(), "n = {n}");
        }
    }

    #[test]
    fn charge_and_tournament_multiply_to_identity() {
        for n in 0..=4 {
            let a = build(Basis::Schur, Basis::HallLittlewoodP, n);
            let b = build(Basis::HallLittlewoodP, Basis::Schur, n);
            assert!(a.multiply(&b).unwrap().is_identity(), "n = {n}");
        }
    }

    #[test]
    fn refinement_matrices_multiply_to_identity() {
        for n in 0..=5 {
            let fm = build(Basis::Fundamental, Basis::QuasiMonomial, n);
            let mf = build(Basis::QuasiMonomial, Basis::Fundamental, n);
            assert!(fm.multiply(&mf).unwrap().is_identity(), "n = {n}");
            let gf = build(Basis::QuasiHallLittlewood, Basis::Fundamental, n);
            let fg = build(Basis::Fundamental, Basis::QuasiHallLittlewood, n);
            assert!(gf.multiply(&fg).unwrap().is_identity(), "n = {n}");
            assert!(fg.multiply(&gf).unwrap().is_identity(), "n = {n}");
        }
    }

    #[test]
    fn hall_littlewood_fundamental_row_values() {
        let m = build(Basis::HallLittlewoodP, Basis::Fundamental, 4);
        assert_eq!(
            row_of(&m, &[4]),
            vec!["1", "-t", "-t", "t^2", "-t", "t^2", "t^2", "-t^3"]
        );
        assert_eq!(
            row_of(&m, &[3, 1]),
            vec!["0", "1", "-t + 1", "-t", "1", "-2t", "-t", "t^3 + t^2"]
        );
        assert_eq!(
            row_of(&m, &[2, 1, 1]),
            vec!["0", "0", "0", "1", "0", "1", "1", "-t^3 - t^2 - t"]
        );
    }

    #[test]
    fn quasisymmetric_hall_littlewood_rows_match_product_route() {
        for n in 0..=5 {
            let direct = build(Basis::HallLittlewoodP, Basis::QuasiHallLittlewood, n);
            let via_f = build(Basis::HallLittlewoodP, Basis::Fundamental, n)
                .multiply(&build(Basis::Fundamental, Basis::QuasiHallLittlewood, n))
                .unwrap();
            assert_eq!(direct.entries, via_f.entries, "n = {n}");
        }
    }

    #[test]
    fn early_exit_does_not_change_entries() {
        for n in 0..=5 {
            let fast = transition_matrix(
                Basis::HallLittlewoodP,
                Basis::QuasiHallLittlewood,
                n,
                &BuildOptions {
                    early_exit: true,
                    force: false,
                },
            )
            .unwrap();
            let slow = transition_matrix(
                Basis::HallLittlewoodP,
                Basis::QuasiHallLittlewood,
                n,
                &BuildOptions {
                    early_exit: false,
                    force: false,
                },
            )
            .unwrap();
            assert_eq!(fast, slow, "n = {n}");
        }
    }

    #[test]
    fn named_entry_in_degree_five() {
        let m = build(Basis::HallLittlewoodP, Basis::QuasiHallLittlewood, 5);
        let e = m.entry(&[3, 2], &[1, 2, 1, 1]).unwrap();
        assert_eq!(e, &TPoly::parse("-t^4 + t^3 + t^2 - t").unwrap());
    }

    #[test]
    fn monomial_spread_row() {
        let m = build(Basis::Monomial, Basis::QuasiMonomial, 4);
        assert_eq!(
            row_of(&m, &[2, 1, 1]),
            vec!["0", "0", "0", "1", "0", "1", "1", "0"]
        );
    }

    #[test]
    fn inverse_kostka_row() {
        let m = build(Basis::Monomial, Basis::Schur, 4);
        assert_eq!(row_of(&m, &[3, 1]), vec!["0", "1", "-1", "-1", "2"]);
    }

    #[test]
    fn charge_row() {
        let m = build(Basis::Schur, Basis::HallLittlewoodP, 4);
        assert_eq!(
            row_of(&m, &[2, 2]),
            vec!["0", "0", "1", "t", "t^4 + t^2"]
        );
    }

    #[test]
    fn peak_rows() {
        let kf = build(Basis::Peak, Basis::Fundamental, 4);
        assert_eq!(
            row_of(&kf, &[2, 2]),
            vec!["0", "0", "1", "1", "1", "1", "0", "0"]
        );
        let km = build(Basis::Peak, Basis::QuasiMonomial, 4);
        assert_eq!(
            row_of(&km, &[3, 1]),
            vec!["0", "1", "1", "2", "0", "2", "2", "4"]
        );
        let kg = build(Basis::Peak, Basis::QuasiHallLittlewood, 4);
        assert_eq!(
            kg.entry(&[3, 1], &[2, 1, 1]).unwrap(),
            &TPoly::parse("t(1+t)").unwrap()
        );
    }

    #[test]
    fn specializations() {
        let pm = build(Basis::HallLittlewoodP, Basis::Monomial, 4);
        let sm = build(Basis::Schur, Basis::Monomial, 4);
        assert_eq!(pm.specialize(0).unwrap(), sm.specialize(0).unwrap());
        let at_one = pm.specialize(1).unwrap();
        for (i, row) in at_one.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*v, BigInt::from(u8::from(i == j)), "({i},{j})");
            }
        }
        let gf = build(Basis::QuasiHallLittlewood, Basis::Fundamental, 4);
        let gf0 = gf.specialize(0).unwrap();
        for (i, row) in gf0.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*v, BigInt::from(u8::from(i == j)), "({i},{j})");
            }
        }
    }

    #[test]
    fn q_rows_scale_p_rows() {
        let p = build(Basis::HallLittlewoodP, Basis::Fundamental, 4);
        let q = build(Basis::HallLittlewoodQ, Basis::Fundamental, 4);
        for (i, lam) in partitions_of(4).iter().enumerate() {
            let b = b_partition(lam);
            for j in 0..p.cols.len() {
                assert_eq!(q.entries[i][j], &b * &p.entries[i][j], "{lam} col {j}");
            }
        }
    }

    #[test]
    fn skew_expansions() {
        let shape = SkewShape::parse("2.1").unwrap();
        let pf = expand_skew(Basis::HallLittlewoodP, &shape, Basis::Fundamental).unwrap();
        assert_eq!(pf.coeff(&[2, 1]), TPoly::one());
        assert_eq!(pf.coeff(&[1, 2]), TPoly::one());
        assert_eq!(pf.coeff(&[1, 1, 1]), TPoly::parse("-t - t^2").unwrap());
        assert_eq!(pf.coeff(&[3]), TPoly::zero());

        let pm = expand_skew(Basis::HallLittlewoodP, &shape, Basis::QuasiMonomial).unwrap();
        assert_eq!(pm.coeff(&[2, 1]), TPoly::one());
        assert_eq!(pm.coeff(&[1, 2]), TPoly::one());
        assert_eq!(pm.coeff(&[1, 1, 1]), TPoly::parse("2 - t - t^2").unwrap());

        let qf = expand_skew(Basis::HallLittlewoodQ, &shape, Basis::Fundamental).unwrap();
        let b = TPoly::parse("(1-t)(1-t)").unwrap();
        for term in &pf.terms {
            assert_eq!(qf.coeff(&term.index), &b * &term.coeff);
        }

        let text = pf.to_text();
        assert!(text.starts_with("P[2.1] = "), "{text}");
        assert!(text.contains("(-t^2 - t)*F[111]"), "{text}");
    }

    #[test]
    fn empty_degree() {
        let m = build(Basis::Fundamental, Basis::QuasiMonomial, 0);
        assert_eq!(m.rows, vec![Vec::<usize>::new()]);
        assert!(m.is_identity());
        let shape = SkewShape::straight(Partition::empty());
        let e = expand_skew(Basis::HallLittlewoodP, &shape, Basis::Fundamental).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms[0].coeff, TPoly::one());
    }

    #[test]
    fn multiply_rejects_mismatched_inner_indices() {
        let a = build(Basis::Schur, Basis::Monomial, 4);
        let b = build(Basis::Fundamental, Basis::QuasiMonomial, 4);
        assert!(a.multiply(&b).is_err());
        let c = build(Basis::Schur, Basis::Monomial, 3);
        assert!(a.multiply(&c).is_err());
    }

    #[test]
    fn unsupported_pair_is_an_error() {
        let err = transition_matrix(
            Basis::Fundamental,
            Basis::Schur,
            3,
            &BuildOptions::default(),
        )
        .unwrap_err();
        assert!(err.to_string().contains("M(F,s)"), "{err}");
    }

    #[test]
    fn json_round_trip() {
        let m = build(Basis::HallLittlewoodP, Basis::QuasiHallLittlewood, 3);
        let text = serde_json::to_string(&m).unwrap();
        assert!(text.contains("\"from\":\"P\""), "{text}");
        assert!(text.contains("\"rows\":[[3],[2,1],[1,1,1]]"), "{text}");
        let back: TransitionMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn text_and_latex_renderings() {
        let m = build(Basis::HallLittlewoodP, Basis::QuasiHallLittlewood, 4);
        let text = m.to_text();
        assert!(text.starts_with("M(P,G), n = 4"), "{text}");
        assert!(text.contains("211"), "{text}");
        let latex = m.to_latex();
        assert!(latex.starts_with("M(P,G) = \\bordermatrix{"), "{latex}");
        assert!(latex.contains("1111 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & 1 \\cr"), "{latex}");
        assert!(latex.ends_with('}'), "{latex}");
    }

    #[test]
    fn b_factors() {
        assert_eq!(phi_factorial(0), TPoly::one());
        assert_eq!(
            phi_factorial(2),
            TPoly::parse("(1-t)(1-t^2)").unwrap()
        );
        let lam = Partition::new(vec![2, 2, 1]).unwrap();
        assert_eq!(
            b_partition(&lam),
            TPoly::parse("(1-t)(1-t^2)(1-t)").unwrap()
        );
    }
}
