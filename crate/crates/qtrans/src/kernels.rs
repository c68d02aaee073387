//! Signed and weighted counting kernels behind the symmetric-side matrices:
//! the charge statistic on words and tableaux, signed counts of special
//! rim-hook dissections, and weighted sums over special tournament matrices.

use crate::error::{Error, Result};
use crate::indexset::Partition;
use crate::tableaux::Tableau;
use crate::tpoly::TPoly;
use std::collections::{BTreeMap, HashMap};

/// Cap on the tournament matrix size accepted without `force`.
pub const TOURNAMENT_SIZE_LIMIT: usize = 7;

/// Charge of a word with partition content. Permutations are extracted by
/// circular scans (mark the first 1, the first 2 after it, and so on,
/// wrapping at the right end); each contributes the sum of m - k over the
/// k whose successor k+1 sits to their left, with m the extracted length.
pub fn charge_word(word: &[usize]) -> Result<usize> {
    if word.iter().any(|&v| v == 0) {
        return Err(Error::Invalid("charge word letters must be positive".into()));
    }
    let max = word.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; max];
    for &v in word {
        counts[v - 1] += 1;
    }
    if counts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Invalid(format!(
            "word does not have partition content: {counts:?}"
        )));
    }
    let mut remaining: Vec<usize> = word.to_vec();
    let mut total = 0usize;
    while !remaining.is_empty() {
        let len = remaining.len();
        let top = *remaining.iter().max().unwrap();
        let mut marked = vec![false; len];
        let mut idx = 0usize;
        for target in 1..=top {
            let p = (0..len)
                .map(|step| (idx + step) % len)
                .find(|&p| !marked[p] && remaining[p] == target)
                .ok_or_else(|| {
                    Error::Internal("charge extraction lost a symbol".into())
                })?;
            marked[p] = true;
            idx = (p + 1) % len;
        }
        let perm: Vec<usize> = (0..len).filter(|&p| marked[p]).map(|p| remaining[p]).collect();
        let m = perm.len();
        let mut pos = vec![0usize; m + 1];
        for (i, &v) in perm.iter().enumerate() {
            pos[v] = i;
        }
        total += (1..m).filter(|&k| pos[k + 1] < pos[k]).map(|k| m - k).sum::<usize>();
        remaining = (0..len).filter(|&p| !marked[p]).map(|p| remaining[p]).collect();
    }
    Ok(total)
}

/// Charge of a semistandard tableau with partition content: charge of the
/// word reading rows top to bottom, each row right to left.
pub fn charge_tableau(t: &Tableau) -> Result<usize> {
    let mut word = Vec::with_capacity(t.n_cells());
    for row in t.rows() {
        word.extend(row.iter().rev().copied());
    }
    charge_word(&word)
}

/// Signed counts of dissections of the diagram of mu into special rim hooks
/// (each starts in column 1 and moves up and right; a hook spanning r rows
/// has sign (-1)^(r-1)), grouped by type: the keys are the sorted hook
/// lengths, the values the signed number of dissections of that type.
pub fn srht_counts(mu: &Partition) -> BTreeMap<Partition, i64> {
    fn go(
        shape: &[usize],
        memo: &mut HashMap<Vec<usize>, BTreeMap<Vec<usize>, i64>>,
    ) -> BTreeMap<Vec<usize>, i64> {
        if shape.is_empty() {
            return BTreeMap::from([(Vec::new(), 1)]);
        }
        if let Some(hit) = memo.get(shape) {
            return hit.clone();
        }
        let ell = shape.len();
        let mut out: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        // The hook through the bottom-left cell leaves column 1 at row r;
        // it has length shape_r + ell - r and spans ell - r + 1 rows, and
        // the rest of the diagram re-forms as the shape below.
        for r in 1..=ell {
            let hook = shape[r - 1] + ell - r;
            let sign = if (ell - r) % 2 == 0 { 1i64 } else { -1 };
            let mut rest: Vec<usize> = shape[..r - 1].to_vec();
            rest.extend(shape[r..].iter().map(|&p| p - 1).filter(|&p| p > 0));
            for (sub_type, cnt) in go(&rest, memo) {
                let mut ty = sub_type.clone();
                let at = ty.partition_point(|&x| x > hook);
                ty.insert(at, hook);
                *out.entry(ty).or_insert(0) += sign * cnt;
            }
        }
        out.retain(|_, v| *v != 0);
        memo.insert(shape.to_vec(), out.clone());
        out
    }
    let mut memo = HashMap::new();
    go(mu.parts(), &mut memo)
        .into_iter()
        .map(|(ty, cnt)| (Partition::new(ty).expect("hook lengths sort to a partition"), cnt))
        .collect()
}

/// Signed number of special rim-hook dissections of the diagram of mu whose
/// hook lengths sort to lambda.
pub fn srht_entry(lambda: &Partition, mu: &Partition) -> i64 {
    srht_counts(mu).get(lambda).copied().unwrap_or(0)
}

/// Weighted sum over special tournament matrices of type lambda and shape
/// mu, of size n = max of the lengths. Entries above the diagonal at equal
/// parts of lambda are forced to 1; a matrix contributes when the row sums
/// lambda_i + (number of wins of i) rearrange the targets mu_i + n - i, with
/// the sign of the matching permutation and t-degree the number of ones
/// below the diagonal, each one weighted by -t.
///
/// Sizes above [`TOURNAMENT_SIZE_LIMIT`] are refused unless forced.
pub fn tournament_entry(lambda: &Partition, mu: &Partition, force: bool) -> Result<TPoly> {
    let n = lambda.len().max(mu.len());
    if n > TOURNAMENT_SIZE_LIMIT && !force {
        return Err(Error::CapExceeded(format!(
            "tournament sum needs {n} x {n} matrices; the limit is {TOURNAMENT_SIZE_LIMIT}"
        )));
    }
    if n == 0 {
        return Ok(TPoly::one());
    }
    let lam: Vec<usize> = (1..=n).map(|i| lambda.part(i)).collect();
    let targets: Vec<usize> = (1..=n).map(|i| mu.part(i) + n - i).collect();
    // Pairs i < j; equal parts of lambda force the entry above the diagonal.
    let mut free: Vec<(usize, usize)> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
            if lam[i] != lam[j] {
                free.push((i, j));
            }
        }
    }
    let mut total = TPoly::zero();
    for mask in 0u64..1u64 << free.len() {
        // up[p] = entry above the diagonal for pair p; forced pairs hold 1.
        let mut up: HashMap<(usize, usize), u8> = pairs.iter().map(|&p| (p, 1)).collect();
        for (b, &p) in free.iter().enumerate() {
            up.insert(p, (mask >> b & 1) as u8);
        }
        let mut rowsum = lam.clone();
        let mut below = 0usize;
        for (&(i, j), &e) in &up {
            if e == 1 {
                rowsum[i] += 1;
            } else {
                rowsum[j] += 1;
                below += 1;
            }
        }
        // Match row sums against the pairwise-distinct targets.
        let Some(w) = rowsum
            .iter()
            .map(|rs| targets.iter().position(|tv| tv == rs))
            .collect::<Option<Vec<usize>>>()
        else {
            continue;
        };
        let mut seen = vec![false; n];
        if w.iter().any(|&wi| std::mem::replace(&mut seen[wi], true)) {
            continue;
        }
        let inversions = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| w[a] > w[b])
            .count();
        let sign = if (inversions + below) % 2 == 0 { 1 } else { -1 };
        let term = &TPoly::monomial(sign, below);
        total = &total + term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indexset::SkewShape;
    use crate::tableaux::enumerate_ssyt;
    use crate::Error;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(text: &str) -> TPoly {
        TPoly::parse(text).unwrap()
    }

    #[test]
    fn charge_of_words() {
        assert_eq!(charge_word(&[]).unwrap(), 0);
        assert_eq!(charge_word(&[1, 2, 3, 4]).unwrap(), 0);
        assert_eq!(charge_word(&[4, 3, 2, 1]).unwrap(), 6);
        assert_eq!(charge_word(&[2, 1]).unwrap(), 1);
        // Two extractions: 2 1 1 splits into 2 1 (charge 1) and 1.
        assert_eq!(charge_word(&[2, 1, 1]).unwrap(), 1);
        assert_eq!(charge_word(&[1, 2, 1]).unwrap(), 0);
        // Wrapping scan: in 2 1 1 3 the marks are 1 (position 2), 2, 3.
        assert_eq!(charge_word(&[2, 1, 1, 3]).unwrap(), 2);
        assert_eq!(charge_word(&[3, 1, 1, 2]).unwrap(), 1);
        // Content must be a partition.
        assert!(matches!(charge_word(&[2, 2, 1]), Err(Error::Invalid(_))));
        assert!(charge_word(&[0]).is_err());
    }

    #[test]
    fn charge_of_tableaux() {
        let shape = SkewShape::parse("3.1").unwrap();
        let content = crate::indexset::Composition::new(vec![2, 1, 1]).unwrap();
        let charges: Vec<usize> = enumerate_ssyt(&shape, 3, Some(&content))
            .unwrap()
            .iter()
            .map(|t| charge_tableau(t).unwrap())
            .collect();
        // Reading words 2113 and 3112.
        assert_eq!(charges, vec![2, 1]);

        // Single column: reading word 1 2 ... n has charge 0.
        let col = SkewShape::parse("1.1.1.1").unwrap();
        let t = enumerate_syt_single(&col);
        assert_eq!(charge_tableau(&t).unwrap(), 0);
        // Single row: reading word n ... 2 1.
        let row = SkewShape::parse("4").unwrap();
        let t = enumerate_syt_single(&row);
        assert_eq!(charge_tableau(&t).unwrap(), 6);
    }

    fn enumerate_syt_single(shape: &SkewShape) -> Tableau {
        let mut all = crate::tableaux::enumerate_syt(shape).unwrap();
        assert_eq!(all.len(), 1);
        all.pop().unwrap()
    }

    #[test]
    fn rim_hook_counts() {
        let to_map = |m: BTreeMap<Partition, i64>| -> Vec<(Vec<usize>, i64)> {
            m.into_iter().map(|(p, c)| (p.parts().to_vec(), c)).collect()
        };
        assert_eq!(
            to_map(srht_counts(&part(&[2, 1]))),
            vec![(vec![2, 1], 1), (vec![3], -1)]
        );
        assert_eq!(
            to_map(srht_counts(&part(&[2, 2]))),
            vec![(vec![2, 2], 1), (vec![3, 1], -1)]
        );
        assert_eq!(
            to_map(srht_counts(&part(&[1, 1, 1]))),
            vec![(vec![1, 1, 1], 1), (vec![2, 1], -2), (vec![3], 1)]
        );
        // Column of four cells.
        assert_eq!(srht_entry(&part(&[4]), &part(&[1, 1, 1, 1])), -1);
        assert_eq!(srht_entry(&part(&[3, 1]), &part(&[1, 1, 1, 1])), 2);
        assert_eq!(srht_entry(&part(&[2, 2]), &part(&[1, 1, 1, 1])), 1);
        assert_eq!(srht_entry(&part(&[2, 1, 1]), &part(&[1, 1, 1, 1])), -3);
        assert_eq!(srht_entry(&part(&[1, 1, 1, 1]), &part(&[1, 1, 1, 1])), 1);
        // The only dissection of a single row is the row itself.
        assert_eq!(srht_entry(&part(&[4]), &part(&[4])), 1);
        assert_eq!(srht_entry(&part(&[3, 1]), &part(&[4])), 0);
        // Empty shape.
        assert_eq!(srht_entry(&Partition::empty(), &Partition::empty()), 1);
    }

    #[test]
    fn tournament_small_values() {
        let e = |l: &[usize], m: &[usize]| tournament_entry(&part(l), &part(m), false).unwrap();
        assert_eq!(e(&[1], &[1]), TPoly::one());
        assert_eq!(e(&[2], &[2]), TPoly::one());
        assert_eq!(e(&[2], &[1, 1]), poly("-t"));
        assert_eq!(e(&[1, 1], &[2]), TPoly::zero());
        assert_eq!(e(&[1, 1], &[1, 1]), TPoly::one());
        assert_eq!(e(&[3], &[2, 1]), poly("-t"));
        assert_eq!(e(&[3], &[1, 1, 1]), poly("t^2"));
        assert_eq!(e(&[2, 1], &[1, 1, 1]), poly("-t - t^2"));
        assert_eq!(e(&[2, 1], &[2, 1]), TPoly::one());
        assert_eq!(e(&[1, 1, 1], &[1, 1, 1]), TPoly::one());
        // Upper triangularity in dominance: expanding down is impossible.
        assert_eq!(e(&[1, 1, 1], &[3]), TPoly::zero());
        assert_eq!(e(&[1, 1, 1], &[2, 1]), TPoly::zero());
    }

    #[test]
    fn tournament_size_guard() {
        let tall = part(&[1; 8]);
        let err = tournament_entry(&tall, &tall, false).unwrap_err();
        assert!(matches!(err, Error::CapExceeded(_)));
        // Forcing works; all entries above the diagonal are forced to 1,
        // leaving exactly one matrix, the identity match.
        assert_eq!(tournament_entry(&tall, &tall, true).unwrap(), TPoly::one());
    }
}
