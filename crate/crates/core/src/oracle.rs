//! Brute-force reference implementations, kept deliberately independent of
//! the closed-formula path: Littlewood-Richardson coefficients by exhaustive
//! skew-tableau enumeration, Pieri products by horizontal-strip enumeration,
//! and socle filtrations by iterated two-step filtration expansion.
//!
//! Nothing here calls into [`crate::schur`] or the formula side of
//! [`crate::category`]; only the `Partition` type and the label/index
//! containers are shared.

use std::collections::BTreeMap;

use crate::category::{GradedMultiset, InjectiveLabel, SimpleLabel};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::schur::SchurPolynomial;

/// Enumeration guards for the brute-force routines.
#[derive(Debug, Clone, Copy)]
pub struct OracleBounds {
    pub max_boxes: u64,
    pub max_t: usize,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            max_boxes: 6,
            max_t: 2,
        }
    }
}

/// `N^eta_{mu,nu}` by counting semistandard skew tableaux of shape eta/mu and
/// content nu whose reverse reading word is a lattice word.
pub fn lr_bruteforce(eta: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if eta.size() != mu.size() + nu.size() || !eta.contains(mu) {
        return 0;
    }
    if nu.size() == 0 {
        return 1; // empty skew shape, the single empty filling
    }
    let nrows = eta.len();
    let maxval = nu.len(); // entries 1..=len(nu) suffice for content nu
    let eta_p = eta.parts();
    let mu_row = |r: usize| -> u32 {
        if r < mu.len() {
            mu.parts()[r]
        } else {
            0
        }
    };

    // cells in reverse reading order: rows top to bottom, right to left;
    // the lattice condition is then checkable prefix by prefix
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for r in 0..nrows {
        for c in (mu_row(r)..eta_p[r]).rev() {
            cells.push((r, c as usize));
        }
    }

    let mut grid: Vec<Vec<u32>> = (0..nrows)
        .map(|r| vec![0u32; eta_p[r] as usize])
        .collect();
    let mut counts = vec![0u32; maxval + 1]; // counts[v] = occurrences of v so far
    let nu_p = nu.parts();

    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        nu_p: &[u32],
        mu_row: &dyn Fn(usize) -> u32,
        maxval: usize,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let mut total = 0;
        for v in 1..=maxval as u32 {
            // content bound
            if counts[v as usize] >= nu_p[v as usize - 1] {
                continue;
            }
            // lattice word: after placing v, #v must not exceed #(v-1)
            if v > 1 && counts[v as usize] + 1 > counts[v as usize - 1] {
                continue;
            }
            // row weakly increasing left to right: the right neighbor was
            // filled earlier in reverse reading order
            if c + 1 < grid[r].len() && grid[r][c + 1] != 0 && v > grid[r][c + 1] {
                continue;
            }
            // column strictly increasing downwards: the cell above was
            // filled earlier (previous row)
            if r > 0 && c >= mu_row(r - 1) as usize && c < grid[r - 1].len() {
                let above = grid[r - 1][c];
                if above != 0 && v <= above {
                    continue;
                }
            }
            grid[r][c] = v;
            counts[v as usize] += 1;
            total += rec(k + 1, cells, grid, counts, nu_p, mu_row, maxval);
            counts[v as usize] -= 1;
            grid[r][c] = 0;
        }
        total
    }
    rec(0, &cells, &mut grid, &mut counts, nu_p, &mu_row, maxval)
}

/// `s_lambda * s_(r)` by direct enumeration of horizontal strips: all ways to
/// add `r` boxes with no two in the same column.
pub fn pieri_product(lambda: &Partition, r: u32) -> SchurPolynomial {
    assert!(r >= 1);
    let mut out = SchurPolynomial::zero();
    let rows = lambda.parts();
    let nrows = rows.len();
    // choose the new length of each row (plus a possible new bottom row)
    fn rec(
        k: usize,
        remaining: u32,
        rows: &[u32],
        acc: &mut Vec<u32>,
        out: &mut SchurPolynomial,
    ) {
        let nrows = rows.len();
        if k == nrows + 1 {
            if remaining == 0 {
                let shape = Partition::from_parts(acc).expect("weakly decreasing by construction");
                out.add_term(shape, 1).expect("small coefficients");
            }
            return;
        }
        let old = if k < nrows { rows[k] } else { 0 };
        // no two added boxes in one column: new row k at most the old row k-1
        let cap_strip = if k == 0 { u32::MAX } else { rows[k - 1] };
        let cap_shape = if k == 0 { u32::MAX } else { acc[k - 1] };
        let hi = cap_strip.min(cap_shape).min(old.saturating_add(remaining));
        for new_len in old..=hi {
            acc.push(new_len);
            rec(k + 1, remaining - (new_len - old), rows, acc, out);
            acc.pop();
        }
    }
    let mut acc = Vec::with_capacity(nrows + 1);
    rec(0, r, rows, &mut acc, &mut out);
    out
}

/// A tensor word: partitions collected per lambda slot (ascending, index s),
/// plus the traceless (mu, nu) pair. Intermediate state of the two-step
/// filtration expansion before slot products are multiplied out.
#[derive(Debug, Clone)]
struct RawConstituent {
    slot_parts: Vec<Vec<Partition>>,
    mu: Partition,
    nu: Partition,
    mult: u64,
}

/// Expand the product of partitions within one slot into simple summands,
/// one pair at a time through `lr_bruteforce`.
fn product_expand(factors: &[Partition]) -> BTreeMap<Partition, u64> {
    let mut current: BTreeMap<Partition, u64> = BTreeMap::new();
    current.insert(Partition::empty(), 1);
    for f in factors {
        let mut next: BTreeMap<Partition, u64> = BTreeMap::new();
        for (shape, mult) in &current {
            for target in partitions_of(shape.size() + f.size()) {
                let c = lr_bruteforce(&target, shape, f);
                if c > 0 {
                    *next.entry(target).or_insert(0) += mult * c;
                }
            }
        }
        current = next;
    }
    current
}

/// Constituents of `(V*/V*_{aleph_u})_lambda` as slot-indexed partitions
/// (ascending slots u..=t), by repeated application of the two-step rule for
/// a Schur functor of a filtered space.
fn expand_quotient(t: usize, u: usize, lambda: &Partition) -> Vec<(Vec<Partition>, u64)> {
    if u == t {
        return vec![(vec![lambda.clone()], 1)];
    }
    // 0 -> U_u -> V*/V*_{aleph_u} -> V*/V*_{aleph_{u+1}} -> 0
    let mut out = Vec::new();
    for asize in 0..=lambda.size() {
        for a in partitions_of(asize) {
            for b in partitions_of(lambda.size() - asize) {
                let c = lr_bruteforce(lambda, &a, &b);
                if c == 0 {
                    continue;
                }
                for (rest, m) in expand_quotient(t, u + 1, &b) {
                    let mut slots = Vec::with_capacity(t - u + 1);
                    slots.push(a.clone());
                    slots.extend(rest);
                    out.push((slots, c * m));
                }
            }
        }
    }
    out
}

/// Constituents of `(V*)_mu (x) V_nu`: expand `(V*)_mu` along the filtration
/// of V* (traceless bottom, then the slot layers), then contract each
/// `(V_*)_a (x) V_nu` piece into traceless simples.
fn expand_mu_nu(t: usize, mu: &Partition, nu: &Partition) -> Vec<RawConstituent> {
    let mut out = Vec::new();
    // 0 -> V_* -> V* -> V*/V*_{aleph_0} -> 0
    for asize in 0..=mu.size() {
        for a in partitions_of(asize) {
            for b in partitions_of(mu.size() - asize) {
                let c1 = lr_bruteforce(mu, &a, &b);
                if c1 == 0 {
                    continue;
                }
                // traceless contraction of (V_*)_a (x) V_nu
                let mut pairs: Vec<(Partition, Partition, u64)> = Vec::new();
                for dsize in 0..=a.size().min(nu.size()) {
                    for delta in partitions_of(dsize) {
                        for xi in partitions_of(a.size() - dsize) {
                            let cxi = lr_bruteforce(&a, &xi, &delta);
                            if cxi == 0 {
                                continue;
                            }
                            for zeta in partitions_of(nu.size() - dsize) {
                                let cz = lr_bruteforce(nu, &zeta, &delta);
                                if cz > 0 {
                                    pairs.push((xi.clone(), zeta, cxi * cz));
                                }
                            }
                        }
                    }
                }
                for (slots, m2) in expand_quotient(t, 0, &b) {
                    for (xi, zeta, m3) in &pairs {
                        out.push(RawConstituent {
                            slot_parts: slots.iter().map(|p| vec![p.clone()]).collect(),
                            mu: xi.clone(),
                            nu: zeta.clone(),
                            mult: c1 * m2 * m3,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Full socle filtration of an indecomposable injective by brute force:
/// expand every tensorand into constituents, multiply slotwise products out,
/// then place each simple at the layer dictated by its defect against the
/// socle.
pub fn socle_layers_bruteforce(
    label: &InjectiveLabel,
    bounds: OracleBounds,
) -> Result<GradedMultiset> {
    let t = label.t();
    if t > bounds.max_t {
        return Err(Error::BoundsExceeded(format!(
            "oracle limited to t <= {}",
            bounds.max_t
        )));
    }
    if label.total_boxes() > bounds.max_boxes {
        return Err(Error::BoundsExceeded(format!(
            "oracle limited to {} total boxes",
            bounds.max_boxes
        )));
    }
    let socle = label.socle();

    // gather raw constituents factor by factor
    let mut combos: Vec<RawConstituent> = expand_mu_nu(t, &socle.mu, &socle.nu);
    for s in 0..=t {
        let lam = socle.slot(s);
        if lam.is_empty() {
            continue;
        }
        let expansions = expand_quotient(t, s, lam);
        let mut next = Vec::with_capacity(combos.len() * expansions.len());
        for combo in &combos {
            for (slots, m) in &expansions {
                let mut merged = combo.clone();
                for (j, p) in slots.iter().enumerate() {
                    if !p.is_empty() {
                        merged.slot_parts_mut_entry(s + j).push(p.clone());
                    }
                }
                merged.mult *= m;
                next.push(merged);
            }
        }
        combos = next;
    }

    // multiply out the per-slot products and assign layers by defect
    let mut out = GradedMultiset::new();
    let socle_index = socle.index();
    for combo in combos {
        let mut slot_options: Vec<Vec<(Partition, u64)>> = Vec::with_capacity(t + 1);
        for s in 0..=t {
            let factors = combo.slot_parts.get(s).cloned().unwrap_or_default();
            slot_options.push(product_expand(&factors).into_iter().collect());
        }
        // cartesian product over slots
        let mut stack: Vec<(usize, Vec<Partition>, u64)> = vec![(0, Vec::new(), combo.mult)];
        while let Some((s, picked, m)) = stack.pop() {
            if s == t + 1 {
                let mut lambdas = picked.clone();
                lambdas.reverse(); // ascending slots -> descending storage
                let simple = SimpleLabel::new(lambdas, combo.mu.clone(), combo.nu.clone());
                let idx = simple.index();
                // defect against the socle index, computed inline
                let d_rank = socle_index_rank(&socle_index) - socle_index_rank(&idx);
                debug_assert!(d_rank >= 0, "constituent must sit above the socle");
                out.insert(1 + d_rank as u64, simple, m);
                continue;
            }
            for (p, c) in &slot_options[s] {
                let mut nxt = picked.clone();
                nxt.push(p.clone());
                stack.push((s + 1, nxt, m * c));
            }
        }
    }
    Ok(out)
}

/// Rank `w(i) = n - sum_s s*n_s`, written out independently of the category
/// module.
fn socle_index_rank(idx: &crate::category::InjectiveIndex) -> i64 {
    let t = idx.t();
    idx.n as i64 - (0..=t).map(|s| s as i64 * idx.slot(s) as i64).sum::<i64>()
}

impl RawConstituent {
    fn slot_parts_mut_entry(&mut self, s: usize) -> &mut Vec<Partition> {
        while self.slot_parts.len() <= s {
            self.slot_parts.push(Vec::new());
        }
        &mut self.slot_parts[s]
    }
}
