//! The ring of symmetric functions in the Schur basis: products, iterated
//! coproducts with box-count truncations, the Hall inner product, and
//! Littlewood-Richardson coefficients.
//!
//! The LR coefficient here is computed by Jacobi-Trudi expansion of one factor
//! into complete homogeneous pieces followed by Pieri multiplication; the
//! independent tableau-enumeration route lives in [`crate::oracle`].

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};

/// Finite integer combination of Schur basis elements. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurPolynomial {
    terms: BTreeMap<Partition, i64>,
}

impl SchurPolynomial {
    pub fn zero() -> Self {
        SchurPolynomial::default()
    }

    /// The single basis element `s_lambda`.
    pub fn basis(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, 1);
        SchurPolynomial { terms }
    }

    /// The unit `s_emptyset`.
    pub fn one() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn coefficient(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Occupied(mut e) => {
                let v = e.get().checked_add(coeff).ok_or(Error::ArithmeticOverflow)?;
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &SchurPolynomial) -> Result<SchurPolynomial> {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c)?;
        }
        Ok(out)
    }
}

/// One summand of an iterated coproduct: an ordered tuple of slot partitions
/// with a positive multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TensorTerm {
    pub slots: Vec<Partition>,
    pub coeff: u64,
}

/// Canonical memo key: (eta, mu, nu) with mu <= nu in the canonical order,
/// valid by LR symmetry.
type LrKey = (Partition, Partition, Partition);

fn lr_memo() -> &'static Mutex<HashMap<LrKey, u64>> {
    static MEMO: OnceLock<Mutex<HashMap<LrKey, u64>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn canonical_lr_key(eta: &Partition, mu: &Partition, nu: &Partition) -> LrKey {
    if mu <= nu {
        (eta.clone(), mu.clone(), nu.clone())
    } else {
        (eta.clone(), nu.clone(), mu.clone())
    }
}

/// Preload LR memo entries (used by the CLI cache). Entries only speed
/// things up; results must be identical with a cold table.
pub fn preload_lr_memo(entries: impl IntoIterator<Item = (LrKey, u64)>) {
    let mut memo = lr_memo().lock().unwrap();
    for (k, v) in entries {
        memo.insert(k, v);
    }
}

/// Snapshot of the current LR memo contents.
pub fn lr_memo_snapshot() -> Vec<(LrKey, u64)> {
    let memo = lr_memo().lock().unwrap();
    let mut out: Vec<_> = memo.iter().map(|(k, &v)| (k.clone(), v)).collect();
    out.sort();
    out
}

/// Multiply `lambda` by the complete homogeneous function `h_r`: all ways of
/// adding a horizontal strip of `r` boxes (Pieri rule).
fn pieri_h_shapes(lambda: &Partition, r: u32) -> Vec<Partition> {
    if r == 0 {
        return vec![lambda.clone()];
    }
    // rows of the result: row k gets between lambda[k] (no removal allowed)
    // and lambda[k-1] boxes; a new row of at most lambda[last] boxes may
    // appear at the bottom.
    let rows = lambda.parts();
    let nrows = rows.len();
    let mut out = Vec::new();
    let mut acc: Vec<u32> = Vec::with_capacity(nrows + 1);
    fn rec(
        k: usize,
        remaining: u32,
        rows: &[u32],
        acc: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        let nrows = rows.len();
        if k == nrows + 1 {
            if remaining == 0 {
                out.push(
                    Partition::from_parts(acc).expect("pieri rows are weakly decreasing"),
                );
            }
            return;
        }
        let old = if k < nrows { rows[k] } else { 0 };
        // horizontal strip: new row k length in [old, prev_old] and weakly
        // decreasing with the row above as already chosen
        let upper_old = if k == 0 { u32::MAX } else { rows[k - 1] };
        let upper_acc = if k == 0 { u32::MAX } else { acc[k - 1] };
        let hi = upper_old.min(upper_acc).min(old.saturating_add(remaining));
        if hi < old {
            return;
        }
        for new_len in old..=hi {
            acc.push(new_len);
            rec(k + 1, remaining - (new_len - old), rows, acc, out);
            acc.pop();
        }
    }
    rec(0, r, rows, &mut acc, &mut out);
    out
}

/// The Littlewood-Richardson coefficient `N^eta_{mu,nu}`: multiplicity of
/// `s_eta` in `s_mu * s_nu`.
pub fn lr_coefficient(eta: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if eta.size() != mu.size() + nu.size() || !eta.contains(mu) || !eta.contains(nu) {
        return 0;
    }
    let key = canonical_lr_key(eta, mu, nu);
    if let Some(&v) = lr_memo().lock().unwrap().get(&key) {
        return v;
    }
    let v = lr_jacobi_trudi(eta, &key.1, &key.2);
    lr_memo().lock().unwrap().insert(key, v);
    v
}

/// Signed Jacobi-Trudi expansion: `s_nu = det(h_{nu_i - i + j})`, so the
/// product `s_mu * s_nu` is a signed sum of iterated Pieri multiplications.
fn lr_jacobi_trudi(eta: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let k = nu.len();
    if k == 0 {
        return u64::from(eta == mu);
    }
    let nu_parts = nu.parts();
    let mut count: i64 = 0;
    // iterate over permutations of {0..k} via Heap's algorithm on indices
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        let mut sign = 1i64;
        {
            // parity of perm
            let mut seen = vec![false; k];
            for start in 0..k {
                if seen[start] {
                    continue;
                }
                let mut len = 0;
                let mut x = start;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                    len += 1;
                }
                if len % 2 == 0 {
                    sign = -sign;
                }
            }
        }
        // h-exponents for this permutation; negative entry kills the term
        let mut degrees = Vec::with_capacity(k);
        let mut ok = true;
        for i in 0..k {
            let d = nu_parts[i] as i64 - (i as i64 + 1) + (perm[i] as i64 + 1);
            if d < 0 {
                ok = false;
                break;
            }
            degrees.push(d as u32);
        }
        if ok {
            // multiply s_mu by each h_d, counting paths that land on eta
            let mut current: BTreeMap<Partition, i64> = BTreeMap::new();
            current.insert(mu.clone(), 1);
            for &d in &degrees {
                let mut next: BTreeMap<Partition, i64> = BTreeMap::new();
                for (shape, mult) in current {
                    if shape.size() + d as u64 > eta.size() {
                        continue;
                    }
                    for added in pieri_h_shapes(&shape, d) {
                        if eta.contains(&added) {
                            *next.entry(added).or_insert(0) += mult;
                        }
                    }
                }
                current = next;
            }
            count += sign * current.get(eta).copied().unwrap_or(0);
        }
        if !next_permutation_state(&mut perm) {
            break;
        }
    }
    debug_assert!(count >= 0, "LR coefficient must be nonnegative");
    count.max(0) as u64
}

/// Advance to the next permutation in lexicographic order; false after the
/// last one.
fn next_permutation_state(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Multiplicity of `s_eta` in the product of the factors' Schur functions,
/// as a chained sum of LR coefficients.
pub fn multi_lr(eta: &Partition, factors: &[Partition]) -> u64 {
    let total: u64 = factors.iter().map(Partition::size).sum();
    if total != eta.size() {
        return 0;
    }
    // fold left, keeping only intermediate shapes inside eta
    let mut current: BTreeMap<Partition, u64> = BTreeMap::new();
    current.insert(Partition::empty(), 1);
    for f in factors {
        let mut next: BTreeMap<Partition, u64> = BTreeMap::new();
        for (shape, mult) in &current {
            for target in partitions_of(shape.size() + f.size()) {
                if !eta.contains(&target) {
                    continue;
                }
                let c = lr_coefficient(&target, shape, f);
                if c > 0 {
                    *next.entry(target).or_insert(0) += mult * c;
                }
            }
        }
        current = next;
    }
    current.get(eta).copied().unwrap_or(0)
}

/// Bilinear extension of `s_mu * s_nu = sum_eta N^eta_{mu,nu} s_eta`.
pub fn schur_product(a: &SchurPolynomial, b: &SchurPolynomial) -> Result<SchurPolynomial> {
    let mut out = SchurPolynomial::zero();
    for (mu, ca) in a.terms() {
        for (nu, cb) in b.terms() {
            let c = ca.checked_mul(cb).ok_or(Error::ArithmeticOverflow)?;
            for eta in partitions_of(mu.size() + nu.size()) {
                let n = lr_coefficient(&eta, mu, nu);
                if n > 0 {
                    let n = i64::try_from(n).map_err(|_| Error::ArithmeticOverflow)?;
                    out.add_term(eta, c.checked_mul(n).ok_or(Error::ArithmeticOverflow)?)?;
                }
            }
        }
    }
    Ok(out)
}

/// All `k`-slot terms of the iterated coproduct of `s_lambda`, sorted slotwise
/// in the canonical partition order.
pub fn iterated_coproduct(lambda: &Partition, k: usize) -> Vec<TensorTerm> {
    assert!(k >= 1, "coproduct needs at least one slot");
    let n = lambda.size();
    let mut out = Vec::new();
    let mut slots: Vec<Partition> = Vec::with_capacity(k);
    fn rec(
        lambda: &Partition,
        k: usize,
        remaining: u64,
        slots: &mut Vec<Partition>,
        out: &mut Vec<TensorTerm>,
    ) {
        if slots.len() == k {
            if remaining == 0 {
                let coeff = multi_lr(lambda, slots);
                if coeff > 0 {
                    out.push(TensorTerm {
                        slots: slots.clone(),
                        coeff,
                    });
                }
            }
            return;
        }
        let slots_left = k - slots.len();
        for sz in 0..=remaining {
            if slots_left == 1 && sz != remaining {
                continue;
            }
            for p in partitions_of(sz) {
                if !lambda.contains(&p) {
                    continue;
                }
                slots.push(p);
                rec(lambda, k, remaining - sz, slots, out);
                slots.pop();
            }
        }
    }
    rec(lambda, k, n, &mut slots, &mut out);
    out.sort();
    out
}

/// The terms of the iterated coproduct whose slot `j` carries exactly
/// `box_counts[j]` boxes.
pub fn truncated_coproduct(lambda: &Partition, box_counts: &[u64]) -> Result<Vec<TensorTerm>> {
    let total: u64 = box_counts.iter().sum();
    if total != lambda.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            got: total,
        });
    }
    Ok(iterated_coproduct(lambda, box_counts.len())
        .into_iter()
        .filter(|t| {
            t.slots
                .iter()
                .zip(box_counts)
                .all(|(p, &c)| p.size() == c)
        })
        .collect())
}

/// The Hall inner product: Schur basis orthonormal.
pub fn hall_inner(a: &SchurPolynomial, b: &SchurPolynomial) -> i64 {
    a.terms()
        .map(|(p, c)| c * b.coefficient(p))
        .sum()
}
