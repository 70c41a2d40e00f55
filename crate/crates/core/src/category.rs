//! Structure of the category `T_{aleph_t}`: simple and injective labels, the
//! index poset with its defect rank function, blocks, socle filtrations of
//! indecomposable injectives, composition multiplicities, Hom dimensions, and
//! the t=0 Ext dimensions.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::schur::{self, SchurPolynomial};

/// Ambient category `T_{aleph_t}` plus enumeration guards.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CategoryContext {
    t: usize,
    max_boxes: u64,
}

pub const DEFAULT_MAX_BOXES: u64 = 8;
pub const DEFAULT_MAX_T: usize = 4;

impl CategoryContext {
    pub fn new(t: usize) -> Result<Self> {
        Self::with_max_boxes(t, DEFAULT_MAX_BOXES)
    }

    pub fn with_max_boxes(t: usize, max_boxes: u64) -> Result<Self> {
        if t > DEFAULT_MAX_T {
            return Err(Error::BoundsExceeded(format!(
                "t = {t} exceeds maximum {DEFAULT_MAX_T}"
            )));
        }
        Ok(CategoryContext { t, max_boxes })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Number of lambda slots, t+1.
    pub fn slots(&self) -> usize {
        self.t + 1
    }

    pub fn max_boxes(&self) -> u64 {
        self.max_boxes
    }

    fn guard_boxes(&self, boxes: u64) -> Result<()> {
        if boxes > self.max_boxes {
            return Err(Error::BoundsExceeded(format!(
                "{boxes} boxes exceed the configured maximum {}",
                self.max_boxes
            )));
        }
        Ok(())
    }
}

/// Label of a simple object `V_{lambda_t,...,lambda_0,mu,nu}`.
///
/// `lambdas` is stored in descending slot order: `lambdas[0]` is the slot-t
/// partition, `lambdas[t]` the slot-0 one, matching the subscript order in
/// which labels are written and serialized. The derived `Ord` is therefore
/// the slotwise canonical order from the top slot down to `nu`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimpleLabel {
    pub lambdas: Vec<Partition>,
    pub mu: Partition,
    pub nu: Partition,
}

impl SimpleLabel {
    /// `lambdas` in descending slot order (slot t first).
    pub fn new(lambdas: Vec<Partition>, mu: Partition, nu: Partition) -> Self {
        assert!(!lambdas.is_empty(), "a label needs at least one lambda slot");
        SimpleLabel { lambdas, mu, nu }
    }

    pub fn trivial(t: usize) -> Self {
        SimpleLabel::new(vec![Partition::empty(); t + 1], Partition::empty(), Partition::empty())
    }

    pub fn t(&self) -> usize {
        self.lambdas.len() - 1
    }

    /// The slot-s partition (s counted as in the subscripts, 0..=t).
    pub fn slot(&self, s: usize) -> &Partition {
        &self.lambdas[self.t() - s]
    }

    pub fn total_boxes(&self) -> u64 {
        self.lambdas.iter().map(Partition::size).sum::<u64>() + self.mu.size() + self.nu.size()
    }

    pub fn index(&self) -> InjectiveIndex {
        InjectiveIndex {
            entries: self.lambdas.iter().map(Partition::size).collect(),
            n: self.mu.size(),
            m: self.nu.size(),
        }
    }

    /// Block invariant: sum of lambda sizes plus |mu| minus |nu|.
    pub fn content(&self) -> i64 {
        self.lambdas.iter().map(|l| l.size() as i64).sum::<i64>() + self.mu.size() as i64
            - self.nu.size() as i64
    }
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V_{{")?;
        for l in &self.lambdas {
            write!(f, "{l},")?;
        }
        write!(f, "{},{}}}", self.mu, self.nu)
    }
}

/// Label of an indecomposable injective `~V_{lambda_t,...,lambda_0,mu,nu}`,
/// the injective hull of the simple object with the same label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct InjectiveLabel(pub SimpleLabel);

impl InjectiveLabel {
    pub fn new(lambdas: Vec<Partition>, mu: Partition, nu: Partition) -> Self {
        InjectiveLabel(SimpleLabel::new(lambdas, mu, nu))
    }

    pub fn socle(&self) -> &SimpleLabel {
        &self.0
    }

    pub fn t(&self) -> usize {
        self.0.t()
    }

    pub fn total_boxes(&self) -> u64 {
        self.0.total_boxes()
    }

    pub fn index(&self) -> InjectiveIndex {
        self.0.index()
    }
}

impl fmt::Display for InjectiveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "~{}", self.0)
    }
}

/// Poset element `(n_t,...,n_0,n,m)` indexing a generator `X_i`.
/// `entries` is in descending slot order, like label lambdas.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct InjectiveIndex {
    pub entries: Vec<u64>,
    pub n: u64,
    pub m: u64,
}

impl InjectiveIndex {
    pub fn new(entries: Vec<u64>, n: u64, m: u64) -> Self {
        assert!(!entries.is_empty());
        InjectiveIndex { entries, n, m }
    }

    pub fn t(&self) -> usize {
        self.entries.len() - 1
    }

    /// `n_s` for slot index s (descending storage).
    pub fn slot(&self, s: usize) -> u64 {
        self.entries[self.t() - s]
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().sum::<u64>() + self.n + self.m
    }

    pub fn content(&self) -> i64 {
        self.entries.iter().map(|&e| e as i64).sum::<i64>() + self.n as i64 - self.m as i64
    }

    /// Rank function: `w(i) = n - sum_s s * n_s`.
    pub fn rank(&self) -> i64 {
        let t = self.t();
        let weighted: i64 = (0..=t).map(|s| s as i64 * self.slot(s) as i64).sum();
        self.n as i64 - weighted
    }
}

impl fmt::Display for InjectiveIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for e in &self.entries {
            write!(f, "{e},")?;
        }
        write!(f, "{},{})", self.n, self.m)
    }
}

/// Partial order on the index poset: (a) the largest differing lambda slot
/// decreases, (b) n and m both grow, (c) content is preserved.
pub fn leq(i: &InjectiveIndex, j: &InjectiveIndex) -> bool {
    assert_eq!(i.t(), j.t(), "indices must share the ambient t");
    if i == j {
        return true;
    }
    // (a): entries are stored descending, so the first differing stored
    // position is the largest differing slot
    for (a, b) in i.entries.iter().zip(&j.entries) {
        if a != b {
            if a < b {
                return false;
            }
            break;
        }
    }
    i.n <= j.n && i.m <= j.m && i.content() == j.content()
}

/// Defect of a comparable pair: `d(i,j) = n' - n + sum_s s (n_s - n'_s)`,
/// the common length of maximal chains from i to j. `None` if incomparable.
pub fn defect(i: &InjectiveIndex, j: &InjectiveIndex) -> Option<u64> {
    if !leq(i, j) {
        return None;
    }
    let d = j.rank() - i.rank();
    debug_assert!(d >= 0, "defect of a comparable pair is nonnegative");
    Some(d as u64)
}

pub fn same_block(a: &SimpleLabel, b: &SimpleLabel) -> bool {
    a.content() == b.content()
}

/// A socle filtration: layer index q >= 1 mapped to a multiset of simple
/// labels.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GradedMultiset {
    pub layers: BTreeMap<u64, BTreeMap<SimpleLabel, u64>>,
}

impl GradedMultiset {
    pub fn new() -> Self {
        GradedMultiset::default()
    }

    pub fn insert(&mut self, q: u64, label: SimpleLabel, mult: u64) {
        if mult == 0 {
            return;
        }
        *self
            .layers
            .entry(q)
            .or_default()
            .entry(label)
            .or_insert(0) += mult;
    }

    pub fn multiplicity(&self, q: u64, label: &SimpleLabel) -> u64 {
        self.layers
            .get(&q)
            .and_then(|l| l.get(label))
            .copied()
            .unwrap_or(0)
    }

    pub fn num_layers(&self) -> usize {
        self.layers.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &BTreeMap<SimpleLabel, u64>)> {
        self.layers.iter().map(|(&q, l)| (q, l))
    }
}

/// Socle filtration of `(V*/V*_{aleph_u})_lambda`: slot u+j of each layer
/// label receives the j-th tensorand of the iterated coproduct of lambda,
/// and the layer index is 1 plus the box count weighted by slot offset.
pub fn quotient_power_layers(
    ctx: &CategoryContext,
    u: usize,
    lambda: &Partition,
) -> Result<GradedMultiset> {
    assert!(u <= ctx.t(), "slot index out of range");
    ctx.guard_boxes(lambda.size())?;
    let t = ctx.t();
    let nslots = t - u + 1;
    let mut out = GradedMultiset::new();
    for term in schur::iterated_coproduct(lambda, nslots) {
        let mut lambdas = vec![Partition::empty(); t + 1];
        let mut q = 1;
        for (j, p) in term.slots.iter().enumerate() {
            q += j as u64 * p.size();
            lambdas[t - (u + j)] = p.clone();
        }
        out.insert(
            q,
            SimpleLabel::new(lambdas, Partition::empty(), Partition::empty()),
            term.coeff,
        );
    }
    Ok(out)
}

/// Multiplicity of `V_{eta_t,...,eta_0,xi,zeta}` in the socle filtration of
/// `(V*)_mu (x) V_nu`: sum over the contracted diagram delta of the
/// multiplicity of mu in the product eta_0...eta_t * xi * delta times
/// `N^nu_{zeta,delta}`.
pub fn mu_nu_multiplicity(
    mu: &Partition,
    nu: &Partition,
    label: &SimpleLabel,
) -> u64 {
    let eta_boxes: u64 = label.lambdas.iter().map(Partition::size).sum();
    let xi = &label.mu;
    let zeta = &label.nu;
    if zeta.size() > nu.size() || eta_boxes + xi.size() > mu.size() {
        return 0;
    }
    let dsize = nu.size() - zeta.size();
    if eta_boxes + xi.size() + dsize != mu.size() {
        return 0;
    }
    let mut total = 0;
    for delta in partitions_of(dsize) {
        let c2 = schur::lr_coefficient(nu, zeta, &delta);
        if c2 == 0 {
            continue;
        }
        let mut factors: Vec<Partition> = label.lambdas.clone();
        factors.push(xi.clone());
        factors.push(delta);
        total += schur::multi_lr(mu, &factors) * c2;
    }
    total
}

/// Socle filtration of `(V*)_mu (x) V_nu`.
pub fn mu_nu_layers(ctx: &CategoryContext, mu: &Partition, nu: &Partition) -> Result<GradedMultiset> {
    ctx.guard_boxes(mu.size() + nu.size())?;
    let t = ctx.t();
    let mut out = GradedMultiset::new();
    // enumerate (eta_0..eta_t, xi, delta) as coproduct slots of mu; zeta from nu
    for term in schur::iterated_coproduct(mu, t + 3) {
        let (etas_asc, rest) = term.slots.split_at(t + 1);
        let xi = &rest[0];
        let delta = &rest[1];
        if delta.size() > nu.size() {
            continue;
        }
        for zeta in partitions_of(nu.size() - delta.size()) {
            let c2 = schur::lr_coefficient(nu, &zeta, delta);
            if c2 == 0 {
                continue;
            }
            let q = 1
                + (nu.size() - zeta.size())
                + etas_asc
                    .iter()
                    .enumerate()
                    .map(|(x, p)| (x as u64 + 1) * p.size())
                    .sum::<u64>();
            let mut lambdas: Vec<Partition> = etas_asc.to_vec();
            lambdas.reverse();
            out.insert(
                q,
                SimpleLabel::new(lambdas, xi.clone(), zeta),
                term.coeff * c2,
            );
        }
    }
    Ok(out)
}

/// Decompose a tensor product of simple labels slotwise via LR coefficients.
/// At most one factor may carry nonempty (mu, nu); that pair passes through.
pub fn simple_slotwise_product(factors: &[SimpleLabel]) -> Result<BTreeMap<SimpleLabel, u64>> {
    assert!(!factors.is_empty());
    let t = factors[0].t();
    assert!(factors.iter().all(|f| f.t() == t));
    let traceless: Vec<&SimpleLabel> = factors
        .iter()
        .filter(|f| !f.mu.is_empty() || !f.nu.is_empty())
        .collect();
    if traceless.len() > 1 {
        return Err(Error::UnsupportedProduct(
            "more than one factor carries nonempty (mu, nu) slots".into(),
        ));
    }
    let (mu, nu) = traceless
        .first()
        .map(|f| (f.mu.clone(), f.nu.clone()))
        .unwrap_or_else(|| (Partition::empty(), Partition::empty()));

    // per stored position k: expand the product of all factor partitions
    let mut slot_expansions: Vec<Vec<(Partition, u64)>> = Vec::with_capacity(t + 1);
    for k in 0..=t {
        let mut acc = SchurPolynomial::one();
        for f in factors {
            acc = schur::schur_product(&acc, &SchurPolynomial::basis(f.lambdas[k].clone()))?;
        }
        slot_expansions.push(
            acc.terms()
                .map(|(p, c)| {
                    debug_assert!(c > 0);
                    (p.clone(), c as u64)
                })
                .collect(),
        );
    }

    let mut out: BTreeMap<SimpleLabel, u64> = BTreeMap::new();
    let mut choice = vec![0usize; t + 1];
    loop {
        let mut lambdas = Vec::with_capacity(t + 1);
        let mut coeff: u64 = 1;
        for k in 0..=t {
            let (p, c) = &slot_expansions[k][choice[k]];
            lambdas.push(p.clone());
            coeff *= c;
        }
        *out
            .entry(SimpleLabel::new(lambdas, mu.clone(), nu.clone()))
            .or_insert(0) += coeff;
        // advance the mixed-radix counter
        let mut k = 0;
        loop {
            if k > t {
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < slot_expansions[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Convolution of two graded multisets: layers add with offset one
/// (q = q_a + q_b - 1), constituents multiply slotwise.
fn graded_tensor(a: &GradedMultiset, b: &GradedMultiset) -> Result<GradedMultiset> {
    let mut out = GradedMultiset::new();
    for (qa, la) in a.iter() {
        for (qb, lb) in b.iter() {
            for (sa, &ma) in la {
                for (sb, &mb) in lb {
                    for (s, c) in simple_slotwise_product(&[sa.clone(), sb.clone()])? {
                        out.insert(qa + qb - 1, s, ma * mb * c);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Socle filtration of the indecomposable injective `~V_label`, as the graded
/// convolution of the per-slot quotient filtrations with the (mu, nu) one.
pub fn injective_socle_layers(ctx: &CategoryContext, label: &InjectiveLabel) -> Result<GradedMultiset> {
    assert_eq!(label.t(), ctx.t(), "label does not fit the context");
    ctx.guard_boxes(label.total_boxes())?;
    let t = ctx.t();
    let socle = label.socle();
    let mut acc = mu_nu_layers(ctx, &socle.mu, &socle.nu)?;
    for s in (0..=t).rev() {
        let lam = socle.slot(s);
        if lam.is_empty() {
            continue;
        }
        let part = quotient_power_layers(ctx, s, lam)?;
        acc = graded_tensor(&acc, &part)?;
    }
    debug_assert_eq!(acc.multiplicity(1, socle), 1, "socle must be simple");
    Ok(acc)
}

/// Multiplicity of a simple constituent in the layer forced by the defect.
pub fn composition_multiplicity(
    ctx: &CategoryContext,
    inj: &InjectiveLabel,
    simple: &SimpleLabel,
) -> Result<u64> {
    let d = match defect(&simple.index(), &inj.index()) {
        Some(d) => d,
        None => return Ok(0),
    };
    let layers = injective_socle_layers(ctx, inj)?;
    Ok(layers.multiplicity(d + 1, simple))
}

/// Decomposition of the generator `X_i` into indecomposable injectives:
/// labels with the prescribed slot sizes, with Schur-Weyl multiplicities
/// (products of standard-tableau counts).
pub fn decompose_injective_index(
    ctx: &CategoryContext,
    i: &InjectiveIndex,
) -> Result<BTreeMap<InjectiveLabel, u64>> {
    assert_eq!(i.t(), ctx.t(), "index does not fit the context");
    ctx.guard_boxes(i.total())?;
    let mut out = BTreeMap::new();
    let slot_choices: Vec<Vec<Partition>> = i
        .entries
        .iter()
        .map(|&e| partitions_of(e))
        .collect();
    let rho_choices = partitions_of(i.n);
    let sigma_choices = partitions_of(i.m);
    fn rec(
        k: usize,
        slot_choices: &[Vec<Partition>],
        picked: &mut Vec<Partition>,
        mult: u64,
        rho_choices: &[Partition],
        sigma_choices: &[Partition],
        out: &mut BTreeMap<InjectiveLabel, u64>,
    ) -> Result<()> {
        if k == slot_choices.len() {
            for rho in rho_choices {
                for sigma in sigma_choices {
                    let m = mult * rho.syt_count()? * sigma.syt_count()?;
                    let label =
                        InjectiveLabel::new(picked.clone(), rho.clone(), sigma.clone());
                    *out.entry(label).or_insert(0) += m;
                }
            }
            return Ok(());
        }
        for p in &slot_choices[k] {
            picked.push(p.clone());
            let m = mult * p.syt_count()?;
            rec(k + 1, slot_choices, picked, m, rho_choices, sigma_choices, out)?;
            picked.pop();
        }
        Ok(())
    }
    rec(
        0,
        &slot_choices,
        &mut Vec::new(),
        1,
        &rho_choices,
        &sigma_choices,
        &mut out,
    )?;
    Ok(out)
}

/// `dim Hom(X_i, X_j)`. Uses the injectivity identity
/// `dim Hom(M, I(S)) = [M : S]`, valid since every simple has scalar
/// endomorphisms: summing composition multiplicities of X_i against the
/// indecomposable summands of X_j.
pub fn hom_dim(ctx: &CategoryContext, i: &InjectiveIndex, j: &InjectiveIndex) -> Result<u64> {
    let dec_i = decompose_injective_index(ctx, i)?;
    let dec_j = decompose_injective_index(ctx, j)?;
    // total composition multiplicities of X_i
    let mut comp: BTreeMap<SimpleLabel, u64> = BTreeMap::new();
    for (label, mult) in &dec_i {
        let layers = injective_socle_layers(ctx, label)?;
        for (_, layer) in layers.iter() {
            for (s, &c) in layer {
                *comp.entry(s.clone()).or_insert(0) += mult * c;
            }
        }
    }
    let mut total = 0;
    for (label, mult_j) in &dec_j {
        if let Some(&c) = comp.get(label.socle()) {
            total += c * mult_j;
        }
    }
    Ok(total)
}

/// The only degree in which `Ext(T', T)` may be nonzero: the defect of the
/// index pair. `None` means all Ext groups vanish.
pub fn ext_degree(t_prime: &SimpleLabel, t: &SimpleLabel) -> Option<u64> {
    defect(&t_prime.index(), &t.index())
}

/// `dim Ext^q(T', T)` at t=0, read off as a composition multiplicity in the
/// injective hull of the mu-transposed target label.
pub fn ext_dim_t0(t_prime: &SimpleLabel, t: &SimpleLabel, q: u64) -> Result<u64> {
    if t_prime.t() != 0 || t.t() != 0 {
        return Err(Error::UnsupportedContext(
            "Ext dimensions are only computable at t = 0".into(),
        ));
    }
    let ctx = CategoryContext::new(0)?;
    let source = SimpleLabel::new(
        t_prime.lambdas.clone(),
        t_prime.mu.conjugate(),
        t_prime.nu.clone(),
    );
    let hull = InjectiveLabel::new(t.lambdas.clone(), t.mu.conjugate(), t.nu.clone());
    let layers = injective_socle_layers(&ctx, &hull)?;
    Ok(layers.multiplicity(q + 1, &source))
}

/// All simple labels for slot count t+1 with total box count at most
/// `max_boxes` (enumeration helper for self-checks and sampling).
pub fn all_simple_labels(t: usize, max_boxes: u64) -> Vec<SimpleLabel> {
    let nslots = t + 3;
    let mut out = Vec::new();
    let mut slots: Vec<Partition> = Vec::with_capacity(nslots);
    fn rec(
        nslots: usize,
        budget: u64,
        slots: &mut Vec<Partition>,
        out: &mut Vec<SimpleLabel>,
    ) {
        if slots.len() == nslots {
            let lambdas = slots[..nslots - 2].to_vec();
            out.push(SimpleLabel::new(
                lambdas,
                slots[nslots - 2].clone(),
                slots[nslots - 1].clone(),
            ));
            return;
        }
        for sz in 0..=budget {
            for p in partitions_of(sz) {
                slots.push(p);
                rec(nslots, budget - sz, slots, out);
                slots.pop();
            }
        }
    }
    rec(nslots, max_boxes, &mut slots, &mut out);
    out.sort();
    out
}
