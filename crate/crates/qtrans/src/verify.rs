//! Named verification suites shared by the command-line `verify` verb and the
//! acceptance tests.
//!
//! Each suite returns a list of [`Check`] results instead of panicking, so a
//! caller can print one line per check and decide how to exit. The suites
//! cover: hard-coded reference tables at degree four, individually documented
//! entries and worked statistics, algebraic identities between independently
//! built matrices, standardization round-trips on starred tableaux, agreement
//! with the brute-force oracle, and the sign-reversing pairing that proves the
//! alternating refinement sums collapse.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::indexset::{
    compositions_of, g_stat, is_finer, k_poly, parts_label, partitions_inside, partitions_of,
    s_stat, Composition, Partition, SkewShape,
};
use crate::oracle::{extract_m_terms, raw_p, render_terms};
use crate::tableaux::{
    enumerate_ssyt, qspecial_cells, special_cells, standardize, unstandardize, StarVariant,
    StarredTableau,
};
use crate::tpoly::TPoly;
use crate::transition::{
    b_partition, expand_skew, transition_matrix, Basis, BuildOptions, TransitionMatrix,
};

/// Outcome of a single verification check.
#[derive(Clone, Debug)]
pub struct Check {
    /// Short stable description, e.g. `"appendix M(P,F) n=4"`.
    pub name: String,
    pub passed: bool,
    /// Empty on success, otherwise the first mismatch found.
    pub detail: String,
}

impl Check {
    fn new(name: String, outcome: std::result::Result<(), String>) -> Check {
        match outcome {
            Ok(()) => Check {
                name,
                passed: true,
                detail: String::new(),
            },
            Err(detail) => Check {
                name,
                passed: false,
                detail,
            },
        }
    }
}

/// The suite names accepted by [`run_suite`].
pub const SUITE_NAMES: [&str; 7] = [
    "appendix",
    "named",
    "identities",
    "bijection",
    "oracle",
    "involution",
    "all",
];

/// Runs one suite (or `"all"`) and collects its checks. `max_n` bounds the
/// degrees the parameterized suites sweep; the reference-table and named-value
/// suites have fixed inputs and ignore it.
pub fn run_suite(suite: &str, max_n: usize) -> Result<Vec<Check>> {
    match suite {
        "appendix" => suite_appendix(),
        "named" => suite_named(),
        "identities" => suite_identities(max_n),
        "bijection" => suite_bijection(max_n),
        "oracle" => suite_oracle(max_n),
        "involution" => suite_involution(max_n),
        "all" => {
            let mut checks = suite_appendix()?;
            checks.extend(suite_named()?);
            checks.extend(suite_identities(max_n)?);
            checks.extend(suite_bijection(max_n)?);
            checks.extend(suite_oracle(max_n)?);
            checks.extend(suite_involution(max_n)?);
            Ok(checks)
        }
        other => Err(Error::Invalid(format!(
            "unknown suite `{other}`; expected one of {}",
            SUITE_NAMES.join(", ")
        ))),
    }
}

fn build(from: Basis, to: Basis, n: usize) -> Result<TransitionMatrix> {
    transition_matrix(from, to, n, &BuildOptions::default())
}

/// Compares one row of a built matrix against expected coefficient strings.
fn row_check(m: &TransitionMatrix, row: &[usize], expected: &[&str]) -> Result<()> {
    let i = m
        .rows
        .iter()
        .position(|r| r == row)
        .ok_or_else(|| Error::Invalid(format!("no row {} in M({},{})", parts_label(row), m.from, m.to)))?;
    if expected.len() != m.cols.len() {
        return Err(Error::Invalid(format!(
            "expected {} columns, matrix has {}",
            expected.len(),
            m.cols.len()
        )));
    }
    for (j, text) in expected.iter().enumerate() {
        let want = TPoly::parse(text)?;
        if m.entries[i][j] != want {
            return Err(Error::Internal(format!(
                "M({},{}) entry ({}, {}) is {}, expected {}",
                m.from,
                m.to,
                parts_label(row),
                parts_label(&m.cols[j]),
                m.entries[i][j],
                want
            )));
        }
    }
    Ok(())
}

fn grid(rows: &[&[&'static str]]) -> Vec<Vec<&'static str>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

/// The twenty-one reference tables at degree four. Row and column labels
/// follow the canonical index orders: partitions 4, 31, 22, 211, 1111;
/// compositions 4, 31, 22, 211, 13, 121, 112, 1111; peak compositions
/// 4, 31, 22.
#[rustfmt::skip]
fn golden_matrices() -> Vec<(Basis, Basis, Vec<Vec<&'static str>>)> {
    use Basis::*;
    vec![
        (Schur, Monomial, grid(&[
            &["1", "1", "1", "1", "1"],
            &["0", "1", "1", "2", "3"],
            &["0", "0", "1", "1", "2"],
            &["0", "0", "0", "1", "3"],
            &["0", "0", "0", "0", "1"],
        ])),
        (Schur, Fundamental, grid(&[
            &["1", "0", "0", "0", "0", "0", "0", "0"],
            &["0", "1", "1", "0", "1", "0", "0", "0"],
            &["0", "0", "1", "0", "0", "1", "0", "0"],
            &["0", "0", "0", "1", "0", "1", "1", "0"],
            &["0", "0", "0", "0", "0", "0", "0", "1"],
        ])),
        (Monomial, QuasiMonomial, grid(&[
            &["1", "0", "0", "0", "0", "0", "0", "0"],
            &["0", "1", "0", "0", "1", "0", "0", "0"],
            &["0", "0", "1", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "1", "0", "1", "1", "0"],
            &["0", "0", "0", "0", "0", "0", "0", "1"],
        ])),
        (HallLittlewoodP, Monomial, grid(&[
            &["1", "1-t", "1-t", "(1-t)^2", "(1-t)^3"],
            &["0", "1", "1-t", "2(1-t)", "3-5t+t^2+t^3"],
            &["0", "0", "1", "1-t", "2-3t+t^3"],
            &["0", "0", "0", "1", "3-t-t^2-t^3"],
            &["0", "0", "0", "0", "1"],
        ])),
        (Monomial, Schur, grid(&[
            &["1", "-1", "0", "1", "-1"],
            &["0", "1", "-1", "-1", "2"],
            &["0", "0", "1", "-1", "1"],
            &["0", "0", "0", "1", "-3"],
            &["0", "0", "0", "0", "1"],
        ])),
        (Schur, HallLittlewoodP, grid(&[
            &["1", "t", "t^2", "t^3", "t^6"],
            &["0", "1", "t", "t+t^2", "t^3+t^4+t^5"],
            &["0", "0", "1", "t", "t^2+t^4"],
            &["0", "0", "0", "1", "t+t^2+t^3"],
            &["0", "0", "0", "0", "1"],
        ])),
        (HallLittlewoodP, Schur, grid(&[
            &["1", "-t", "0", "t^2", "-t^3"],
            &["0", "1", "-t", "-t", "t^2+t^3"],
            &["0", "0", "1", "-t", "t^3"],
            &["0", "0", "0", "1", "-t-t^2-t^3"],
            &["0", "0", "0", "0", "1"],
        ])),
        (Fundamental, QuasiMonomial, grid(&[
            &["1", "1", "1", "1", "1", "1", "1", "1"],
            &["0", "1", "0", "1", "0", "1", "0", "1"],
            &["0", "0", "1", "1", "0", "0", "1", "1"],
            &["0", "0", "0", "1", "0", "0", "0", "1"],
            &["0", "0", "0", "0", "1", "1", "1", "1"],
            &["0", "0", "0", "0", "0", "1", "0", "1"],
            &["0", "0", "0", "0", "0", "0", "1", "1"],
            &["0", "0", "0", "0", "0", "0", "0", "1"],
        ])),
        (QuasiMonomial, Fundamental, grid(&[
            &["1", "-1", "-1", "1", "-1", "1", "1", "-1"],
            &["0", "1", "0", "-1", "0", "-1", "0", "1"],
            &["0", "0", "1", "-1", "0", "0", "-1", "1"],
            &["0", "0", "0", "1", "0", "0", "0", "-1"],
            &["0", "0", "0", "0", "1", "-1", "-1", "1"],
            &["0", "0", "0", "0", "0", "1", "0", "-1"],
            &["0", "0", "0", "0", "0", "0", "1", "-1"],
            &["0", "0", "0", "0", "0", "0", "0", "1"],
        ])),
        (QuasiHallLittlewood, Fundamental, grid(&[
            &["1", "-t", "-t", "t^2", "-t", "t^2", "t^2", "-t^3"],
            &["0", "1", "0", "-t", "0", "-t", "0", "t^2"],
            &["0", "0", "1", "-t^2", "0", "0", "-t", "t^3"],
            &["0", "0", "0", "1", "0", "0", "0", "-t"],
            &["0", "0", "0", "0", "1", "-t^2", "-t^2", "t^4"],
            &["0", "0", "0", "0", "0", "1", "0", "-t^2"],
            &["0", "0", "0", "0", "0", "0", "1", "-t^3"],
            &["0", "0", "0", "0", "0", "0", "0", "1"],
        ])),
        (QuasiHallLittlewood, QuasiMonomial, grid(&[
            &["1", "1-t", "1-t", "(1-t)^2", "1-t", "(1-t)^2", "(1-t)^2", "(1-t)^3"],
            &["0", "1", "0", "1-t", "0", "1-t", "0", "(1-t)^2"],
            &["0", "0", "1", "1-t^2", "0", "0", "1-t", "(1-t)(1-t^2)"],
            &["0", "0", "0", "1", "0", "0", "0", "1-t"],
            &["0", "0", "0", "0", "1", "1-t^2", "1-t^2", "(1-t^2)^2"],
            &["0", "0", "0", "0", "0", "1", "0", "1-t^2"],
            &["0", "0", "0", "0", "0", "0", "1", "1-t^3"],
            &["0", "0", "0", "0", "0", "0", "0", "1"],
        ])),
        (HallLittlewoodP, Fundamental, grid(&[
            &["1", "-t", "-t", "t^2", "-t", "t^2", "t^2", "-t^3"],
            &["0", "1", "1-t", "-t", "1", "-2t", "-t", "t^3+t^2"],
            &["0", "0", "1", "-t", "0", "1-t", "-t", "t^3"],
            &["0", "0", "0", "1", "0", "1", "1", "-t^3-t^2-t"],
            &["0", "0", "0", "0", "0", "0", "0", "1"],
        ])),
        (Fundamental, QuasiHallLittlewood, grid(&[
            &["1", "t", "t", "t^3", "t", "t^3", "t^3", "t^6"],
            &["0", "1", "0", "t", "0", "t", "0", "t^3"],
            &["0", "0", "1", "t^2", "0", "0", "t", "t^4"],
            &["0", "0", "0", "1", "0", "0", "0", "t"],
            &["0", "0", "0", "0", "1", "t^2", "t^2", "t^5"],
            &["0", "0", "0", "0", "0", "1", "0", "t^2"],
            &["0", "0", "0", "0", "0", "0", "1", "t^3"],
            &["0", "0", "0", "0", "0", "0", "0", "1"],
        ])),
        (QuasiMonomial, QuasiHallLittlewood, grid(&[
            &["1", "t-1", "t-1", "t^3-t^2-t+1", "t-1", "t^3-t^2-t+1", "t^3-t^2-t+1", "t^6-t^5-t^4+t^2+t-1"],
            &["0", "1", "0", "t-1", "0", "t-1", "0", "t^3-t^2-t+1"],
            &["0", "0", "1", "t^2-1", "0", "0", "t-1", "t^4-t^3-t+1"],
            &["0", "0", "0", "1", "0", "0", "0", "t-1"],
            &["0", "0", "0", "0", "1", "t^2-1", "t^2-1", "t^5-t^3-t^2+1"],
            &["0", "0", "0", "0", "0", "1", "0", "t^2-1"],
            &["0", "0", "0", "0", "0", "0", "1", "t^3-1"],
            &["0", "0", "0", "0", "0", "0", "0", "1"],
        ])),
        (HallLittlewoodP, QuasiHallLittlewood, grid(&[
            &["1", "0", "0", "0", "0", "0", "0", "0"],
            &["0", "1", "1-t", "t^2-t^3", "1", "t^2-t", "0", "0"],
            &["0", "0", "1", "t^2-t", "0", "1-t", "0", "0"],
            &["0", "0", "0", "1", "0", "1", "1", "0"],
            &["0", "0", "0", "0", "0", "0", "0", "1"],
        ])),
        (QuasiSchur, Fundamental, grid(&[
            &["1", "0", "0", "0", "0", "0", "0", "0"],
            &["0", "1", "0", "0", "0", "0", "0", "0"],
            &["0", "0", "1", "0", "0", "1", "0", "0"],
            &["0", "0", "0", "1", "0", "0", "0", "0"],
            &["0", "0", "1", "0", "1", "0", "0", "0"],
            &["0", "0", "0", "0", "0", "1", "0", "0"],
            &["0", "0", "0", "0", "0", "0", "1", "0"],
            &["0", "0", "0", "0", "0", "0", "0", "1"],
        ])),
        (QuasiSchur, QuasiMonomial, grid(&[
            &["1", "1", "1", "1", "1", "1", "1", "1"],
            &["0", "1", "0", "1", "0", "1", "0", "1"],
            &["0", "0", "1", "1", "0", "1", "1", "2"],
            &["0", "0", "0", "1", "0", "0", "0", "1"],
            &["0", "0", "1", "1", "1", "1", "2", "2"],
            &["0", "0", "0", "0", "0", "1", "0", "1"],
            &["0", "0", "0", "0", "0", "0", "1", "1"],
            &["0", "0", "0", "0", "0", "0", "0", "1"],
        ])),
        (QuasiSchur, QuasiHallLittlewood, grid(&[
            &["1", "t", "t", "t^3", "t", "t^3", "t^3", "t^6"],
            &["0", "1", "0", "t", "0", "t", "0", "t^3"],
            &["0", "0", "1", "t^2", "0", "1", "t", "t^2+t^4"],
            &["0", "0", "0", "1", "0", "0", "0", "t"],
            &["0", "0", "1", "t^2", "1", "t^2", "t+t^2", "t^4+t^5"],
            &["0", "0", "0", "0", "0", "1", "0", "t^2"],
            &["0", "0", "0", "0", "0", "0", "1", "t^3"],
            &["0", "0", "0", "0", "0", "0", "0", "1"],
        ])),
        (Peak, Fundamental, grid(&[
            &["1", "1", "1", "1", "1", "1", "1", "1"],
            &["0", "1", "1", "0", "0", "1", "1", "0"],
            &["0", "0", "1", "1", "1", "1", "0", "0"],
        ])),
        (Peak, QuasiMonomial, grid(&[
            &["1", "2", "2", "4", "2", "4", "4", "8"],
            &["0", "1", "1", "2", "0", "2", "2", "4"],
            &["0", "0", "1", "2", "1", "2", "2", "4"],
        ])),
        (Peak, QuasiHallLittlewood, grid(&[
            &["1", "1+t", "1+t", "(1+t)(1+t^2)", "1+t", "(1+t)(1+t^2)", "(1+t)(1+t^2)", "(1+t)(1+t^2)(1+t^3)"],
            &["0", "1", "1", "t(1+t)", "0", "1+t", "1+t", "t^2(1+t)^2"],
            &["0", "0", "1", "1+t^2", "1", "1+t^2", "t(1+t)", "t(1+t)(1+t^3)"],
        ])),
    ]
}

/// Every supported matrix at degree four against its hard-coded reference
/// table, one check per matrix.
pub fn suite_appendix() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (from, to, table) in golden_matrices() {
        let name = format!("appendix M({from},{to}) n=4");
        let outcome = (|| -> std::result::Result<(), String> {
            let m = build(from, to, 4).map_err(|e| e.to_string())?;
            if m.rows.len() != table.len() {
                return Err(format!(
                    "matrix has {} rows, reference table has {}",
                    m.rows.len(),
                    table.len()
                ));
            }
            for (i, row) in table.iter().enumerate() {
                if row.len() != m.cols.len() {
                    return Err(format!(
                        "matrix has {} columns, reference table row has {}",
                        m.cols.len(),
                        row.len()
                    ));
                }
                for (j, text) in row.iter().enumerate() {
                    let want = TPoly::parse(text).map_err(|e| e.to_string())?;
                    if m.entries[i][j] != want {
                        return Err(format!(
                            "entry ({}, {}) is {}, expected {}",
                            parts_label(&m.rows[i]),
                            parts_label(&m.cols[j]),
                            m.entries[i][j],
                            want
                        ));
                    }
                }
            }
            Ok(())
        })();
        checks.push(Check::new(name, outcome));
    }
    Ok(checks)
}

fn comp(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

/// Individually documented entries, rows, expansions and worked statistics.
pub fn suite_named() -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    checks.push(Check::new(
        "value M(P,G)[32, 1211] at n=5".into(),
        (|| {
            let m = build(Basis::HallLittlewoodP, Basis::QuasiHallLittlewood, 5)
                .map_err(|e| e.to_string())?;
            let got = m
                .entry(&[3, 2], &[1, 2, 1, 1])
                .ok_or("missing entry".to_string())?;
            let want = TPoly::parse("-t^4+t^3+t^2-t").map_err(|e| e.to_string())?;
            if *got == want {
                Ok(())
            } else {
                Err(format!("entry is {got}, expected {want}"))
            }
        })(),
    ));

    checks.push(Check::new(
        "value P[2.1] expanded in F".into(),
        (|| {
            let shape = SkewShape::straight(Partition::new(vec![2, 1]).unwrap());
            let exp = expand_skew(Basis::HallLittlewoodP, &shape, Basis::Fundamental)
                .map_err(|e| e.to_string())?;
            let want: Vec<(&[usize], &str)> =
                vec![(&[2, 1], "1"), (&[1, 2], "1"), (&[1, 1, 1], "-t-t^2")];
            for (index, text) in &want {
                let w = TPoly::parse(text).map_err(|e| e.to_string())?;
                let got = exp.coeff(index);
                if got != w {
                    return Err(format!(
                        "coefficient of F[{}] is {got}, expected {w}",
                        parts_label(index)
                    ));
                }
            }
            let nonzero = exp.terms.iter().filter(|t| !t.coeff.is_zero()).count();
            if nonzero != want.len() {
                return Err(format!("expected {} nonzero terms, got {nonzero}", want.len()));
            }
            Ok(())
        })(),
    ));

    checks.push(Check::new(
        "value S[13] rows in F and G".into(),
        (|| {
            let f = build(Basis::QuasiSchur, Basis::Fundamental, 4).map_err(|e| e.to_string())?;
            row_check(&f, &[1, 3], &["0", "0", "1", "0", "1", "0", "0", "0"])
                .map_err(|e| e.to_string())?;
            let g = build(Basis::QuasiSchur, Basis::QuasiHallLittlewood, 4)
                .map_err(|e| e.to_string())?;
            row_check(
                &g,
                &[1, 3],
                &["0", "0", "1", "t^2", "1", "t^2", "t+t^2", "t^4+t^5"],
            )
            .map_err(|e| e.to_string())
        })(),
    ));

    checks.push(Check::new(
        "value K[31] rows in F and M".into(),
        (|| {
            let f = build(Basis::Peak, Basis::Fundamental, 4).map_err(|e| e.to_string())?;
            row_check(&f, &[3, 1], &["0", "1", "1", "0", "0", "1", "1", "0"])
                .map_err(|e| e.to_string())?;
            let m = build(Basis::Peak, Basis::QuasiMonomial, 4).map_err(|e| e.to_string())?;
            row_check(&m, &[3, 1], &["0", "1", "1", "2", "0", "2", "2", "4"])
                .map_err(|e| e.to_string())
        })(),
    ));

    checks.push(Check::new(
        "value K[22] row in G".into(),
        (|| {
            let g = build(Basis::Peak, Basis::QuasiHallLittlewood, 4).map_err(|e| e.to_string())?;
            row_check(
                &g,
                &[2, 2],
                &["0", "0", "1", "1+t^2", "1", "1+t^2", "t(1+t)", "t(1+t)(1+t^3)"],
            )
            .map_err(|e| e.to_string())
        })(),
    ));

    checks.push(Check::new(
        "value F[3] row in G".into(),
        (|| {
            let g = build(Basis::Fundamental, Basis::QuasiHallLittlewood, 3)
                .map_err(|e| e.to_string())?;
            row_check(&g, &[3], &["1", "t", "t", "t^3"]).map_err(|e| e.to_string())
        })(),
    ));

    checks.push(Check::new(
        "value s(55314, 1221431211) = 14 and its entry".into(),
        (|| {
            let alpha = comp(&[5, 5, 3, 1, 4]);
            let beta = comp(&[1, 2, 2, 1, 4, 3, 1, 2, 1, 1]);
            if !is_finer(&beta, &alpha).map_err(|e| e.to_string())? {
                return Err("expected the long composition to refine the short one".into());
            }
            let s = s_stat(&alpha, &beta).map_err(|e| e.to_string())?;
            if s != 14 {
                return Err(format!("statistic is {s}, expected 14"));
            }
            // Length difference 5 is odd, so the matrix entry is -t^14.
            let sign = if (beta.len() - alpha.len()) % 2 == 0 { 1 } else { -1 };
            let entry = TPoly::monomial(sign, s);
            let want = TPoly::monomial(-1, 14);
            if entry != want {
                return Err(format!("entry is {entry}, expected {want}"));
            }
            Ok(())
        })(),
    ));

    checks.push(Check::new(
        "value g(2121323, 212112212) = 13".into(),
        (|| {
            let gamma = comp(&[2, 1, 2, 1, 3, 2, 3]);
            let beta = comp(&[2, 1, 2, 1, 1, 2, 2, 1, 2]);
            let g = g_stat(&gamma, &beta).map_err(|e| e.to_string())?;
            if g == 13 {
                Ok(())
            } else {
                Err(format!("statistic is {g}, expected 13"))
            }
        })(),
    ));

    checks.push(Check::new(
        "value k(4253, 12213221) = (1+t)(t^3+t^4)(1+t^5)(1+t^7)".into(),
        (|| {
            let alpha = comp(&[4, 2, 5, 3]);
            let beta = comp(&[1, 2, 2, 1, 3, 2, 2, 1]);
            let got = k_poly(&alpha, &beta).map_err(|e| e.to_string())?;
            let want = TPoly::parse("(1+t)(t^3+t^4)(1+t^5)(1+t^7)").map_err(|e| e.to_string())?;
            if got == want {
                Ok(())
            } else {
                Err(format!("product is {got}, expected {want}"))
            }
        })(),
    ));

    checks.push(Check::new(
        "value pairing move on (212135, 2121323, 212112212)".into(),
        (|| {
            let alpha = comp(&[2, 1, 2, 1, 3, 5]);
            let gamma = comp(&[2, 1, 2, 1, 3, 2, 3]);
            let beta = comp(&[2, 1, 2, 1, 1, 2, 2, 1, 2]);
            let moved = pairing_move(&alpha, &beta, &gamma).map_err(|e| e.to_string())?;
            let want = comp(&[2, 1, 2, 1, 1, 2, 2, 3]);
            if moved != want {
                return Err(format!("move sent gamma to {moved}, expected {want}"));
            }
            let back = pairing_move(&alpha, &beta, &moved).map_err(|e| e.to_string())?;
            if back != gamma {
                return Err(format!("move is not involutive: came back to {back}"));
            }
            let pairs = [
                (s_stat(&alpha, &gamma).map_err(|e| e.to_string())?, 6usize),
                (g_stat(&gamma, &beta).map_err(|e| e.to_string())?, 13),
                (s_stat(&alpha, &moved).map_err(|e| e.to_string())?, 11),
                (g_stat(&moved, &beta).map_err(|e| e.to_string())?, 8),
            ];
            for (got, want) in pairs {
                if got != want {
                    return Err(format!("statistic is {got}, expected {want}"));
                }
            }
            Ok(())
        })(),
    ));

    checks.push(Check::new(
        "value assorted documented entries".into(),
        (|| {
            use Basis::*;
            let cases: Vec<(Basis, Basis, usize, &[usize], &[usize], &str)> = vec![
                (Schur, Monomial, 4, &[3, 1], &[2, 1, 1], "2"),
                (HallLittlewoodP, Monomial, 4, &[3, 1], &[1, 1, 1, 1], "3-5t+t^2+t^3"),
                (HallLittlewoodP, Monomial, 3, &[2, 1], &[1, 1, 1], "2-t-t^2"),
                (Schur, Fundamental, 4, &[3, 1], &[2, 2], "1"),
                (Schur, Fundamental, 4, &[4], &[1, 1, 1, 1], "0"),
                (HallLittlewoodP, Fundamental, 3, &[2, 1], &[1, 1, 1], "-t-t^2"),
                (HallLittlewoodP, Fundamental, 4, &[3, 1], &[1, 2, 1], "-2t"),
                (HallLittlewoodQ, Fundamental, 3, &[2, 1], &[2, 1], "(1-t)^2"),
                (Fundamental, QuasiHallLittlewood, 4, &[4], &[2, 1, 1], "t^3"),
                (Fundamental, QuasiHallLittlewood, 4, &[2, 2], &[1, 1, 2], "t"),
                (QuasiMonomial, QuasiHallLittlewood, 4, &[2, 2], &[1, 1, 1, 1], "t^4-t^3-t+1"),
                (QuasiHallLittlewood, QuasiMonomial, 4, &[2, 2], &[1, 1, 1, 1], "t^3-t^2-t+1"),
                (HallLittlewoodP, QuasiHallLittlewood, 4, &[3, 1], &[2, 1, 1], "t^2-t^3"),
                (QuasiSchur, QuasiHallLittlewood, 4, &[1, 3], &[1, 1, 2], "t+t^2"),
                (QuasiSchur, QuasiHallLittlewood, 4, &[2, 2], &[1, 1, 1, 1], "t^2+t^4"),
                (Peak, QuasiMonomial, 4, &[4], &[1, 1, 1, 1], "8"),
                (Peak, QuasiHallLittlewood, 4, &[4], &[1, 1, 1, 1], "(1+t)(1+t^2)(1+t^3)"),
            ];
            for (from, to, n, row, col, text) in cases {
                let m = build(from, to, n).map_err(|e| e.to_string())?;
                let got = m.entry(row, col).ok_or_else(|| {
                    format!("missing entry ({}, {})", parts_label(row), parts_label(col))
                })?;
                let want = TPoly::parse(text).map_err(|e| e.to_string())?;
                if *got != want {
                    return Err(format!(
                        "M({from},{to}) entry ({}, {}) is {got}, expected {want}",
                        parts_label(row),
                        parts_label(col)
                    ));
                }
            }
            Ok(())
        })(),
    ));

    Ok(checks)
}

/// Algebraic identities between independently constructed matrices: inverse
/// pairs, factorizations through F, route agreements, specializations at
/// t = 0 and t = 1, row scalings and row groupings.
pub fn suite_identities(max_n: usize) -> Result<Vec<Check>> {
    use Basis::*;
    let mut checks = Vec::new();
    // The Schur / Hall-Littlewood corner rests on the signed binary-matrix
    // expansion, which grows exponentially with the number of rows; sweep it
    // over a smaller range.
    let heavy = max_n.min(4);

    let inverse_pairs = [
        (Fundamental, QuasiMonomial, max_n),
        (QuasiHallLittlewood, Fundamental, max_n),
        (Schur, Monomial, heavy),
        (Schur, HallLittlewoodP, heavy),
    ];
    for (a, b, cap) in inverse_pairs {
        let name = format!("identity M({a},{b}) * M({b},{a}) = I (n <= {cap})");
        let outcome = (|| {
            for n in 0..=cap {
                let prod = build(a, b, n)
                    .and_then(|l| Ok((l, build(b, a, n)?)))
                    .and_then(|(l, r)| l.multiply(&r))
                    .map_err(|e| e.to_string())?;
                if !prod.is_identity() {
                    return Err(format!("product is not the identity at n = {n}"));
                }
            }
            Ok(())
        })();
        checks.push(Check::new(name, outcome));
    }

    type Route = &'static [(Basis, Basis)];
    let route_pairs: [(Route, Route, usize); 9] = [
        (
            &[(HallLittlewoodP, Fundamental), (Fundamental, QuasiHallLittlewood)],
            &[(HallLittlewoodP, QuasiHallLittlewood)],
            max_n,
        ),
        (
            &[(QuasiSchur, Fundamental), (Fundamental, QuasiHallLittlewood)],
            &[(QuasiSchur, QuasiHallLittlewood)],
            max_n,
        ),
        (
            &[(Peak, Fundamental), (Fundamental, QuasiHallLittlewood)],
            &[(Peak, QuasiHallLittlewood)],
            max_n,
        ),
        (
            &[(Peak, Fundamental), (Fundamental, QuasiMonomial)],
            &[(Peak, QuasiMonomial)],
            max_n,
        ),
        (
            &[(QuasiHallLittlewood, Fundamental), (Fundamental, QuasiMonomial)],
            &[(QuasiHallLittlewood, QuasiMonomial)],
            max_n,
        ),
        (
            &[(QuasiSchur, Fundamental), (Fundamental, QuasiMonomial)],
            &[(QuasiSchur, QuasiMonomial)],
            max_n,
        ),
        (
            &[(HallLittlewoodP, Fundamental), (Fundamental, QuasiMonomial)],
            &[(HallLittlewoodP, Monomial), (Monomial, QuasiMonomial)],
            max_n,
        ),
        (
            &[(Schur, Fundamental), (Fundamental, QuasiMonomial)],
            &[(Schur, Monomial), (Monomial, QuasiMonomial)],
            max_n,
        ),
        (
            &[(Schur, HallLittlewoodP), (HallLittlewoodP, Monomial)],
            &[(Schur, Monomial)],
            heavy,
        ),
    ];
    for (left, right, cap) in route_pairs {
        let describe = |route: Route| {
            route
                .iter()
                .map(|(a, b)| format!("M({a},{b})"))
                .collect::<Vec<_>>()
                .join(" * ")
        };
        let name = format!(
            "identity {} = {} (n <= {cap})",
            describe(left),
            describe(right)
        );
        let outcome = (|| {
            let eval = |route: Route, n: usize| -> Result<TransitionMatrix> {
                let mut acc = build(route[0].0, route[0].1, n)?;
                for &(a, b) in &route[1..] {
                    acc = acc.multiply(&build(a, b, n)?)?;
                }
                Ok(acc)
            };
            for n in 0..=cap {
                let l = eval(left, n).map_err(|e| e.to_string())?;
                let r = eval(right, n).map_err(|e| e.to_string())?;
                if l != r {
                    return Err(format!("routes disagree at n = {n}"));
                }
            }
            Ok(())
        })();
        checks.push(Check::new(name, outcome));
    }

    // Specializations: setting t to 0 or 1 must collapse a matrix onto a
    // known integer matrix.
    enum Target {
        Matrix(Basis, Basis),
        Identity,
    }
    let specializations: [(Basis, Basis, u8, Target, usize); 7] = [
        (HallLittlewoodP, Monomial, 0, Target::Matrix(Schur, Monomial), heavy),
        (HallLittlewoodP, Fundamental, 0, Target::Matrix(Schur, Fundamental), max_n),
        (HallLittlewoodP, Monomial, 1, Target::Identity, max_n),
        (QuasiHallLittlewood, Fundamental, 0, Target::Identity, max_n),
        (QuasiHallLittlewood, QuasiMonomial, 1, Target::Identity, max_n),
        (Fundamental, QuasiHallLittlewood, 0, Target::Identity, max_n),
        (QuasiMonomial, QuasiHallLittlewood, 1, Target::Identity, max_n),
    ];
    for (a, b, value, target, cap) in specializations {
        let name = match &target {
            Target::Matrix(c, d) => {
                format!("specialization M({a},{b}) at t={value} = M({c},{d}) (n <= {cap})")
            }
            Target::Identity => format!("specialization M({a},{b}) at t={value} = I (n <= {cap})"),
        };
        let outcome = (|| {
            for n in 0..=cap {
                let got = build(a, b, n)
                    .and_then(|m| m.specialize(value))
                    .map_err(|e| e.to_string())?;
                let want: Vec<Vec<BigInt>> = match &target {
                    Target::Matrix(c, d) => build(*c, *d, n)
                        .and_then(|m| m.specialize(value))
                        .map_err(|e| e.to_string())?,
                    Target::Identity => (0..got.len())
                        .map(|i| {
                            (0..got.len())
                                .map(|j| BigInt::from(usize::from(i == j)))
                                .collect()
                        })
                        .collect(),
                };
                if got != want {
                    return Err(format!("specialization differs at n = {n}"));
                }
            }
            Ok(())
        })();
        checks.push(Check::new(name, outcome));
    }

    checks.push(Check::new(
        format!("identity M(Q,F) rows = b * M(P,F) rows (n <= {max_n})"),
        (|| {
            for n in 0..=max_n {
                let p = build(HallLittlewoodP, Fundamental, n).map_err(|e| e.to_string())?;
                let q = build(HallLittlewoodQ, Fundamental, n).map_err(|e| e.to_string())?;
                for (i, row) in p.rows.iter().enumerate() {
                    let lambda = Partition::new(row.clone()).map_err(|e| e.to_string())?;
                    let b = b_partition(&lambda);
                    for j in 0..p.cols.len() {
                        if q.entries[i][j] != &b * &p.entries[i][j] {
                            return Err(format!(
                                "row {} column {} disagrees at n = {n}",
                                parts_label(row),
                                parts_label(&p.cols[j])
                            ));
                        }
                    }
                }
            }
            Ok(())
        })(),
    ));

    checks.push(Check::new(
        format!("identity M(S,F) rows grouped by sorted index = M(s,F) rows (n <= {max_n})"),
        (|| {
            for n in 0..=max_n {
                let s = build(Schur, Fundamental, n).map_err(|e| e.to_string())?;
                let qs = build(QuasiSchur, Fundamental, n).map_err(|e| e.to_string())?;
                for (i, lam) in s.rows.iter().enumerate() {
                    let mut summed = vec![TPoly::zero(); s.cols.len()];
                    for (k, alpha) in qs.rows.iter().enumerate() {
                        let mut sorted = alpha.clone();
                        sorted.sort_unstable_by(|a, b| b.cmp(a));
                        if sorted == *lam {
                            for (j, cell) in summed.iter_mut().enumerate() {
                                *cell = &*cell + &qs.entries[k][j];
                            }
                        }
                    }
                    if summed != s.entries[i] {
                        return Err(format!(
                            "rows rearranging to {} do not sum to the Schur row at n = {n}",
                            parts_label(lam)
                        ));
                    }
                }
            }
            Ok(())
        })(),
    ));

    checks.push(Check::new(
        format!("flag early-exit leaves M(P,G) unchanged (n <= {max_n})"),
        (|| {
            let slow = BuildOptions {
                early_exit: false,
                ..BuildOptions::default()
            };
            for n in 0..=max_n {
                let a = build(HallLittlewoodP, QuasiHallLittlewood, n).map_err(|e| e.to_string())?;
                let b = transition_matrix(HallLittlewoodP, QuasiHallLittlewood, n, &slow)
                    .map_err(|e| e.to_string())?;
                if a != b {
                    return Err(format!("matrices differ at n = {n}"));
                }
            }
            Ok(())
        })(),
    ));

    Ok(checks)
}

/// Standardization round-trips on starred tableaux and the agreement of the
/// two skew expansion routes, over every skew shape with at most `max_cells`
/// cells (outer partitions of size up to `max_cells`).
pub fn suite_bijection(max_cells: usize) -> Result<Vec<Check>> {
    let mut shapes = Vec::new();
    for k in 0..=max_cells {
        for lambda in partitions_of(k) {
            for mu in partitions_inside(&lambda) {
                shapes.push(SkewShape::new(lambda.clone(), mu)?);
            }
        }
    }

    let mut checks = Vec::new();

    checks.push(Check::new(
        format!("bijection standardization round-trip on shapes with <= {max_cells} cells"),
        (|| {
            for shape in &shapes {
                let n = shape.n_cells();
                for t in enumerate_ssyt(shape, n, None).map_err(|e| e.to_string())? {
                    for variant in [StarVariant::P, StarVariant::Q] {
                        let starrable: Vec<_> = match variant {
                            StarVariant::P => {
                                special_cells(&t).into_iter().map(|(c, _)| c).collect()
                            }
                            StarVariant::Q => {
                                qspecial_cells(&t).into_iter().map(|(c, _)| c).collect()
                            }
                        };
                        for mask in 0usize..1 << starrable.len() {
                            let stars: BTreeSet<_> = starrable
                                .iter()
                                .enumerate()
                                .filter(|(i, _)| mask >> i & 1 == 1)
                                .map(|(_, c)| *c)
                                .collect();
                            let st = StarredTableau::new(t.clone(), stars, variant)
                                .map_err(|e| e.to_string())?;
                            let (std_st, word) = standardize(&st).map_err(|e| e.to_string())?;
                            if !std_st.tableau().is_standard() {
                                return Err(format!(
                                    "standardization of a filling of {shape} is not standard"
                                ));
                            }
                            if std_st.sign() != st.sign() || std_st.tstat() != st.tstat() {
                                return Err(format!(
                                    "standardization changed a statistic on shape {shape}"
                                ));
                            }
                            let back =
                                unstandardize(&std_st, &word).map_err(|e| e.to_string())?;
                            if back != st {
                                return Err(format!(
                                    "round trip failed on a filling of shape {shape}"
                                ));
                            }
                        }
                    }
                }
            }
            Ok(())
        })(),
    ));

    checks.push(Check::new(
        format!("bijection Q-route = b-scaled P-route on shapes with <= {max_cells} cells"),
        (|| {
            for shape in &shapes {
                let n = shape.n_cells();
                let p = expand_skew(Basis::HallLittlewoodP, shape, Basis::Fundamental)
                    .map_err(|e| e.to_string())?;
                let q = expand_skew(Basis::HallLittlewoodQ, shape, Basis::Fundamental)
                    .map_err(|e| e.to_string())?;
                // Q = (b_outer / b_inner) P, stated without division:
                // b_inner * Q-coefficients must equal b_outer * P-coefficients.
                let b_outer = b_partition(shape.outer());
                let b_inner = b_partition(shape.inner());
                for alpha in compositions_of(n) {
                    let left = &b_inner * &q.coeff(alpha.parts());
                    let right = &b_outer * &p.coeff(alpha.parts());
                    if left != right {
                        return Err(format!(
                            "coefficient of F[{alpha}] disagrees on shape {shape}"
                        ));
                    }
                }
            }
            Ok(())
        })(),
    ));

    checks.push(Check::new(
        format!("bijection F-terms refine to M-terms on shapes with <= {max_cells} cells"),
        (|| {
            for shape in &shapes {
                let n = shape.n_cells();
                for basis in [Basis::HallLittlewoodP, Basis::HallLittlewoodQ] {
                    let f = expand_skew(basis, shape, Basis::Fundamental)
                        .map_err(|e| e.to_string())?;
                    let m = expand_skew(basis, shape, Basis::QuasiMonomial)
                        .map_err(|e| e.to_string())?;
                    // Each F term spreads over the refinements of its index.
                    for beta in compositions_of(n) {
                        let mut spread = TPoly::zero();
                        for alpha in compositions_of(n) {
                            if is_finer(&beta, &alpha).map_err(|e| e.to_string())? {
                                spread = &spread + &f.coeff(alpha.parts());
                            }
                        }
                        if spread != m.coeff(beta.parts()) {
                            return Err(format!(
                                "coefficient of M[{beta}] disagrees on shape {shape}"
                            ));
                        }
                    }
                }
            }
            Ok(())
        })(),
    ));

    Ok(checks)
}

/// Agreement with the brute-force oracle: expansions computed from raw
/// alternant quotients match the formula-built rows, and rendering formal
/// expansions back to honest polynomials reproduces the raw ones.
pub fn suite_oracle(max_n: usize) -> Result<Vec<Check>> {
    // The raw quotient caps out at four variables of degree four.
    let cap = max_n.min(4);
    let mut checks = Vec::new();

    checks.push(Check::new(
        format!("oracle raw P expansions match M(P,m) * M(m,M) rows (1 <= n <= {cap})"),
        (|| {
            for n in 1..=cap {
                let route = build(Basis::HallLittlewoodP, Basis::Monomial, n)
                    .and_then(|l| l.multiply(&build(Basis::Monomial, Basis::QuasiMonomial, n)?))
                    .map_err(|e| e.to_string())?;
                for (i, row) in route.rows.iter().enumerate() {
                    let lambda = Partition::new(row.clone()).map_err(|e| e.to_string())?;
                    let raw = raw_p(&lambda, n).map_err(|e| e.to_string())?;
                    let extracted = extract_m_terms(&raw, n).map_err(|e| e.to_string())?;
                    let expected: Vec<(Vec<usize>, TPoly)> = route
                        .cols
                        .iter()
                        .zip(&route.entries[i])
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(alpha, c)| (alpha.clone(), c.clone()))
                        .collect();
                    if extracted != expected {
                        return Err(format!(
                            "expansion of the raw quotient for {} disagrees at n = {n}",
                            parts_label(row)
                        ));
                    }
                }
            }
            Ok(())
        })(),
    ));

    checks.push(Check::new(
        format!("oracle rendered G rows match M(G,M) rows (1 <= n <= {cap})"),
        (|| {
            for n in 1..=cap {
                let gf = build(Basis::QuasiHallLittlewood, Basis::Fundamental, n)
                    .map_err(|e| e.to_string())?;
                let gm = build(Basis::QuasiHallLittlewood, Basis::QuasiMonomial, n)
                    .map_err(|e| e.to_string())?;
                for (i, alpha) in gf.rows.iter().enumerate() {
                    let terms: Vec<(Vec<usize>, TPoly)> = gf
                        .cols
                        .iter()
                        .zip(&gf.entries[i])
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(b, c)| (b.clone(), c.clone()))
                        .collect();
                    let rendered = render_terms(&terms, Basis::Fundamental, n)
                        .map_err(|e| e.to_string())?;
                    let extracted = extract_m_terms(&rendered, n).map_err(|e| e.to_string())?;
                    let expected: Vec<(Vec<usize>, TPoly)> = gm
                        .cols
                        .iter()
                        .zip(&gm.entries[i])
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(b, c)| (b.clone(), c.clone()))
                        .collect();
                    if extracted != expected {
                        return Err(format!(
                            "rendered row {} disagrees with the monomial row at n = {n}",
                            parts_label(alpha)
                        ));
                    }
                }
            }
            Ok(())
        })(),
    ));

    let render_cap = cap.min(3);
    checks.push(Check::new(
        format!("oracle rendered F-expansions reproduce raw P polynomials (n <= {render_cap})"),
        (|| {
            for n in 1..=render_cap {
                for lambda in partitions_of(n) {
                    let shape = SkewShape::straight(lambda.clone());
                    let exp = expand_skew(Basis::HallLittlewoodP, &shape, Basis::Fundamental)
                        .map_err(|e| e.to_string())?;
                    let terms: Vec<(Vec<usize>, TPoly)> = exp
                        .terms
                        .iter()
                        .filter(|t| !t.coeff.is_zero())
                        .map(|t| (t.index.clone(), t.coeff.clone()))
                        .collect();
                    let rendered = render_terms(&terms, Basis::Fundamental, n)
                        .map_err(|e| e.to_string())?;
                    let raw = raw_p(&lambda, n).map_err(|e| e.to_string())?;
                    if rendered != raw {
                        return Err(format!(
                            "rendered expansion of {} disagrees with the raw quotient",
                            shape
                        ));
                    }
                }
            }
            Ok(())
        })(),
    ));

    Ok(checks)
}

/// The pairing that collapses the alternating refinement sums: on the
/// interval between `alpha` (coarse) and `beta` (fine), with `alpha != beta`,
/// sends `gamma` to its partner by joining or splitting parts at the first
/// index where the three compositions disagree.
pub fn pairing_move(
    alpha: &Composition,
    beta: &Composition,
    gamma: &Composition,
) -> Result<Composition> {
    if !(is_finer(gamma, alpha)? && is_finer(beta, gamma)?) {
        return Err(Error::Invalid(format!(
            "{gamma} is not between {alpha} and {beta} in refinement order"
        )));
    }
    if alpha == beta {
        return Err(Error::Invalid(
            "the pairing is only defined when the interval has more than one element".into(),
        ));
    }
    let a = alpha.parts();
    let b = beta.parts();
    let c = gamma.parts();
    let mut j = 0;
    while j < a.len() && j < b.len() && j < c.len() && a[j] == b[j] && b[j] == c[j] {
        j += 1;
    }
    // The common prefix carries the same total in all three compositions, so
    // none of them can end at the first disagreement.
    debug_assert!(j < a.len() && j < b.len() && j < c.len());
    let mut parts = c.to_vec();
    if c[j] == b[j] {
        // gamma already follows the fine end here; its parts j and j+1 sit
        // inside part j of alpha, so joining them stays above alpha.
        debug_assert!(a[j] > c[j]);
        parts[j] += parts[j + 1];
        parts.remove(j + 1);
    } else {
        // gamma follows the coarse end here; beta cuts its part j, so
        // splitting as beta does stays below beta.
        debug_assert!(c[j] > b[j]);
        parts[j] -= b[j];
        parts.insert(j, b[j]);
    }
    Composition::new(parts)
}

/// Properties of the pairing over every refinement interval at degrees up to
/// `max_n`: it is an involution without fixed points that flips the sign and
/// preserves the combined statistic, so the alternating sums telescope.
pub fn suite_involution(max_n: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let weight = |alpha: &Composition,
                  gamma: &Composition,
                  beta: &Composition|
     -> std::result::Result<usize, String> {
        Ok(s_stat(alpha, gamma).map_err(|e| e.to_string())?
            + g_stat(gamma, beta).map_err(|e| e.to_string())?)
    };

    let interval = |alpha: &Composition,
                    beta: &Composition,
                    n: usize|
     -> std::result::Result<Vec<Composition>, String> {
        let sub_a = alpha.sub();
        let sub_b = beta.sub();
        let extra: Vec<usize> = sub_b
            .iter()
            .copied()
            .filter(|x| !sub_a.contains(x))
            .collect();
        let mut out = Vec::with_capacity(1 << extra.len());
        for mask in 0u64..1 << extra.len() {
            let mut set = sub_a.clone();
            for (i, &x) in extra.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    set.push(x);
                }
            }
            set.sort_unstable();
            out.push(Composition::from_sub(&set, n).map_err(|e| e.to_string())?);
        }
        Ok(out)
    };

    checks.push(Check::new(
        format!("pairing is a sign-reversing, weight-preserving involution (n <= {max_n})"),
        (|| {
            for n in 0..=max_n {
                let comps = compositions_of(n);
                for alpha in &comps {
                    for beta in &comps {
                        if alpha == beta || !is_finer(beta, alpha).map_err(|e| e.to_string())? {
                            continue;
                        }
                        for gamma in interval(alpha, beta, n)? {
                            let moved =
                                pairing_move(alpha, beta, &gamma).map_err(|e| e.to_string())?;
                            if moved == gamma {
                                return Err(format!(
                                    "fixed point at gamma = {gamma} between {alpha} and {beta}"
                                ));
                            }
                            if !(is_finer(&moved, alpha).map_err(|e| e.to_string())?
                                && is_finer(beta, &moved).map_err(|e| e.to_string())?)
                            {
                                return Err(format!(
                                    "partner {moved} of {gamma} left the interval ({alpha}, {beta})"
                                ));
                            }
                            let back =
                                pairing_move(alpha, beta, &moved).map_err(|e| e.to_string())?;
                            if back != gamma {
                                return Err(format!(
                                    "pairing not involutive at gamma = {gamma} between {alpha} and {beta}"
                                ));
                            }
                            if moved.len().abs_diff(gamma.len()) != 1 {
                                return Err(format!(
                                    "partner of {gamma} does not flip the sign between {alpha} and {beta}"
                                ));
                            }
                            if weight(alpha, &gamma, beta)? != weight(alpha, &moved, beta)? {
                                return Err(format!(
                                    "pairing changed the weight at gamma = {gamma} between {alpha} and {beta}"
                                ));
                            }
                        }
                    }
                }
            }
            Ok(())
        })(),
    ));

    checks.push(Check::new(
        format!("alternating refinement sums telescope to the delta (n <= {max_n})"),
        (|| {
            for n in 0..=max_n {
                let comps = compositions_of(n);
                for alpha in &comps {
                    for beta in &comps {
                        if !is_finer(beta, alpha).map_err(|e| e.to_string())? {
                            continue;
                        }
                        let mut sum = TPoly::zero();
                        for gamma in interval(alpha, beta, n)? {
                            let sign = if (gamma.len() - alpha.len()) % 2 == 0 { 1 } else { -1 };
                            let term = TPoly::monomial(sign, weight(alpha, &gamma, beta)?);
                            sum = &sum + &term;
                        }
                        let want = if alpha == beta {
                            TPoly::one()
                        } else {
                            TPoly::zero()
                        };
                        if sum != want {
                            return Err(format!(
                                "sum over the interval ({alpha}, {beta}) is {sum}, expected {want}"
                            ));
                        }
                    }
                }
            }
            Ok(())
        })(),
    ));

    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_all_pass(checks: &[Check]) {
        for c in checks {
            assert!(c.passed, "{} failed: {}", c.name, c.detail);
        }
        assert!(!checks.is_empty());
    }

    #[test]
    fn appendix_tables_match() {
        assert_all_pass(&suite_appendix().unwrap());
        assert_eq!(suite_appendix().unwrap().len(), 21);
    }

    #[test]
    fn named_values_match() {
        assert_all_pass(&suite_named().unwrap());
    }

    #[test]
    fn identity_suite_small() {
        assert_all_pass(&suite_identities(4).unwrap());
    }

    #[test]
    fn bijection_suite_small() {
        assert_all_pass(&suite_bijection(4).unwrap());
    }

    #[test]
    fn oracle_suite_small() {
        assert_all_pass(&suite_oracle(3).unwrap());
    }

    #[test]
    fn involution_suite_small() {
        assert_all_pass(&suite_involution(5).unwrap());
    }

    #[test]
    fn pairing_move_worked_example() {
        let alpha = comp(&[2, 1, 2, 1, 3, 5]);
        let beta = comp(&[2, 1, 2, 1, 1, 2, 2, 1, 2]);
        let gamma = comp(&[2, 1, 2, 1, 3, 2, 3]);
        let moved = pairing_move(&alpha, &beta, &gamma).unwrap();
        assert_eq!(moved, comp(&[2, 1, 2, 1, 1, 2, 2, 3]));
        assert_eq!(s_stat(&alpha, &gamma).unwrap(), 6);
        assert_eq!(g_stat(&gamma, &beta).unwrap(), 13);
        assert_eq!(s_stat(&alpha, &moved).unwrap(), 11);
        assert_eq!(g_stat(&moved, &beta).unwrap(), 8);
        assert_eq!(pairing_move(&alpha, &beta, &moved).unwrap(), gamma);
    }

    #[test]
    fn pairing_move_rejects_bad_inputs() {
        let alpha = comp(&[3]);
        assert!(pairing_move(&alpha, &alpha, &alpha).is_err());
        let beta = comp(&[1, 1, 1]);
        let outside = comp(&[2, 1]);
        assert!(pairing_move(&outside, &beta, &alpha).is_err());
    }

    #[test]
    fn suite_dispatch() {
        let checks = run_suite("all", 3).unwrap();
        assert_all_pass(&checks);
        assert!(run_suite("bogus", 3).is_err());
    }
}
