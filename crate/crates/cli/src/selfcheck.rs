//! Oracle-equivalence suites: every closed formula checked against its
//! brute-force counterpart within configured bounds.

use socle_core::category::{self, CategoryContext, InjectiveLabel};
use socle_core::oracle::{self, OracleBounds};
use socle_core::partitions::{partitions_of, partitions_up_to};
use socle_core::schur::{self, SchurPolynomial};

pub struct SuiteReport {
    pub name: &'static str,
    pub cases: u64,
    pub mismatches: u64,
}

pub fn run(max_boxes: u64, max_t: usize) -> Vec<SuiteReport> {
    let mut reports = Vec::new();

    // 1. LR coefficients vs skew-tableau enumeration
    let mut cases = 0;
    let mut mismatches = 0;
    for eta in partitions_up_to(max_boxes) {
        let n = eta.size();
        for k in 0..=n {
            for mu in partitions_of(k) {
                for nu in partitions_of(n - k) {
                    cases += 1;
                    if schur::lr_coefficient(&eta, &mu, &nu) != oracle::lr_bruteforce(&eta, &mu, &nu)
                    {
                        mismatches += 1;
                    }
                }
            }
        }
    }
    reports.push(SuiteReport {
        name: "lr-coefficient vs tableau enumeration",
        cases,
        mismatches,
    });

    // 2. Schur product vs Pieri strip enumeration
    let mut cases = 0;
    let mut mismatches = 0;
    for lam in partitions_up_to(max_boxes.saturating_sub(1)) {
        for r in 1..=(max_boxes + 1 - lam.size()).min(max_boxes) as u32 {
            cases += 1;
            let via_product = schur::schur_product(
                &SchurPolynomial::basis(lam.clone()),
                &SchurPolynomial::basis(
                    socle_core::Partition::parse(&[r as i64]).expect("row shape"),
                ),
            )
            .expect("within bounds");
            if via_product != oracle::pieri_product(&lam, r) {
                mismatches += 1;
            }
        }
    }
    reports.push(SuiteReport {
        name: "schur product vs pieri strips",
        cases,
        mismatches,
    });

    // 3. Socle filtrations vs filtration expansion
    let mut cases = 0;
    let mut mismatches = 0;
    let socle_boxes = max_boxes.min(4);
    for t in 0..=max_t {
        let ctx = CategoryContext::new(t).expect("t within bounds");
        let oracle_bounds = OracleBounds {
            max_boxes: socle_boxes,
            max_t,
        };
        for label in category::all_simple_labels(t, socle_boxes) {
            let inj = InjectiveLabel(label);
            cases += 1;
            let closed = category::injective_socle_layers(&ctx, &inj).expect("within bounds");
            let brute =
                oracle::socle_layers_bruteforce(&inj, oracle_bounds).expect("within bounds");
            if closed != brute {
                mismatches += 1;
            }
        }
    }
    reports.push(SuiteReport {
        name: "injective socle layers vs brute-force expansion",
        cases,
        mismatches,
    });

    // 4. Product/coproduct duality
    let mut cases = 0;
    let mut mismatches = 0;
    for lam in partitions_up_to(max_boxes) {
        for term in schur::iterated_coproduct(&lam, 2) {
            cases += 1;
            if term.coeff != schur::lr_coefficient(&lam, &term.slots[0], &term.slots[1]) {
                mismatches += 1;
            }
        }
    }
    reports.push(SuiteReport {
        name: "coproduct coefficients vs lr duality",
        cases,
        mismatches,
    });

    reports
}
