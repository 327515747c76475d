//! Acceptance suite: one test per criterion, exact equalities throughout,
//! each printing a pass line with its wall time and enforcing the stated
//! budget. Run with `cargo test -p posetw-cli --test acceptance`
//! (`-- --nocapture` to see the lines as they pass).

use std::process::Command;
use std::time::{Duration, Instant};

use posetw_core::chains;
use posetw_core::enumerate;
use posetw_core::gk;
use posetw_core::goldwasser;
use posetw_core::heavy;
use posetw_core::order::{binomial, initial_segment, OrderKind};
use posetw_core::verify::{verify, StatementId, Verdict, VerifyParams};
use posetw_core::width::width;
use posetw_core::{Rational, SetFamily, SubsetMask};

fn params_n(n: u32) -> VerifyParams {
    VerifyParams { n: Some(n), ..VerifyParams::default() }
}

fn finish(criterion: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "{criterion} exceeded its budget: {elapsed:?} >= {budget:?}"
    );
    println!("{criterion}: PASS ({:.1}s)", elapsed.as_secs_f64());
}

/// w(C(d)) equals the special-point count, all n <= 8, all prefixes.
#[test]
fn criterion_01_special_points_count_the_width() {
    let started = Instant::now();
    for n in 1..=8 {
        let report = verify(StatementId::LemmaSpecial, &params_n(n)).unwrap();
        assert_eq!(report.verdict, Verdict::Verified, "n={n}: {:?}", report.counterexamples);
        assert_eq!(report.instances_checked, 1 << n);
    }
    finish("criterion 01 (lemma w(D) = s(D), n <= 8)", started, Duration::from_secs(60));
}

/// Width increments along the binary order happen exactly at special
/// points: oracle widths to n = 8, increment/count consistency to n = 12.
#[test]
fn criterion_02_width_increments_at_special_points() {
    let started = Instant::now();
    for n in 1..=12 {
        let report = verify(StatementId::PropSpecial, &params_n(n)).unwrap();
        assert_eq!(report.verdict, Verdict::Verified, "n={n}: {:?}", report.counterexamples);
        assert_eq!(report.instances_checked, 1 << n);
    }
    finish("criterion 02 (width increments at specials, n <= 12)", started, Duration::from_secs(60));
}

/// The closed form matches the special count for d < 2^16 and the witness
/// antichain is sound for d < 2^12.
#[test]
fn criterion_03_goldwasser_closed_form_and_witness() {
    let started = Instant::now();
    let report = verify(StatementId::PropGoldwasser, &VerifyParams::default()).unwrap();
    assert_eq!(report.verdict, Verdict::Verified, "{:?}", report.counterexamples);
    assert_eq!(report.instances_checked, (1 << 16) - 1 + (1 << 12) - 1);
    finish("criterion 03 (closed-form binary widths)", started, Duration::from_secs(120));
}

/// alpha(C(d)) <= alpha(B(n)) for every d, exactly, with equality at the
/// full lattice, n <= 16.
#[test]
fn criterion_04_alpha_is_maximized_by_the_full_lattice() {
    let started = Instant::now();
    for n in 1..=16 {
        let report = verify(StatementId::ThmAlpha, &params_n(n)).unwrap();
        assert_eq!(report.verdict, Verdict::Verified, "n={n}: {:?}", report.counterexamples);
        assert_eq!(report.instances_checked, 1 << n);
    }
    finish("criterion 04 (alpha bound, n <= 16)", started, Duration::from_secs(120));
}

/// Level-colex initial segments maximize both width and maximal-element
/// count over all downsets of B(4) and B(5).
#[test]
fn criterion_05_level_colex_segments_maximize_width_and_maximals() {
    let started = Instant::now();
    for (n, downsets) in [(4, 168), (5, 7581)] {
        for id in [StatementId::ThmMaxwidth, StatementId::ThmMaxmax] {
            let report = verify(id, &params_n(n)).unwrap();
            assert_eq!(report.verdict, Verdict::Verified, "{id} n={n}: {:?}", report.counterexamples);
            assert_eq!(report.instances_checked, downsets);
        }
    }
    finish("criterion 05 (w(A) <= w(I), m(A) <= m(I))", started, Duration::from_secs(600));
}

/// Every fully compressed family of B(4) (exhaustive) and of B(5) (10^6
/// random families) classifies; compression steps lower the rank sum and
/// never lose maximal elements of downsets.
#[test]
fn criterion_06_compression_classification() {
    let started = Instant::now();
    let report = verify(StatementId::LemmaCompression, &params_n(4)).unwrap();
    assert_eq!(report.verdict, Verdict::Verified, "{:?}", report.counterexamples);
    assert_eq!(report.instances_checked, 65536);

    let params = VerifyParams { samples: Some(1_000_000), ..params_n(5) };
    let report = verify(StatementId::LemmaCompression, &params).unwrap();
    assert_eq!(report.verdict, Verdict::Verified, "{:?}", report.counterexamples);
    assert_eq!(report.instances_checked, 1_000_000);
    finish("criterion 06 (compression fixed points classify)", started, Duration::from_secs(600));
}

/// Convex families split into width-many skipless chains: exhaustively
/// for B(3), and on 10^4 samples each for B(4) and B(5).
#[test]
fn criterion_07_convex_families_have_sd_partitions() {
    let started = Instant::now();
    let report = verify(StatementId::ThmSd, &params_n(3)).unwrap();
    assert_eq!(report.verdict, Verdict::Verified, "{:?}", report.counterexamples);
    // Every convex family of B(3), empty included.
    assert_eq!(report.instances_checked, enumerate::enumerate_convex(3).unwrap().count() as u64);

    for n in [4, 5] {
        let params = VerifyParams { samples: Some(10_000), ..params_n(n) };
        let report = verify(StatementId::ThmSd, &params).unwrap();
        assert_eq!(report.verdict, Verdict::Verified, "n={n}: {:?}", report.counterexamples);
        assert_eq!(report.instances_checked, 10_000);
    }
    finish("criterion 07 (SD-partitions of convex families)", started, Duration::from_secs(300));
}

/// Replaying 10^3 random downsets of B(8) one insertion at a time, the
/// augmenting-path verdict matches the oracle width delta at every step
/// and the maintained partition is always width-many skipless chains.
#[test]
fn criterion_08_augmenting_path_matches_width_deltas() {
    let started = Instant::now();
    let params = VerifyParams { samples: Some(1000), ..params_n(8) };
    let report = verify(StatementId::PropGeneral, &params).unwrap();
    assert_eq!(report.verdict, Verdict::Verified, "{:?}", report.counterexamples);
    assert_eq!(report.instances_checked, 1000);
    finish("criterion 08 (incremental insertion verdicts)", started, Duration::from_secs(300));
}

/// The heavy-family constructions, bounds and searches.
#[test]
fn criterion_09_heavy_constructions_bounds_and_searches() {
    let started = Instant::now();

    // Constructions r <= 4, k <= 3 on grounds up to 32: heavy, with the
    // stated size and width.
    for r in 1..=4u32 {
        for k in 1..=3u32 {
            if k * (2 * r - 1) > 32 {
                continue;
            }
            let h = heavy::heavy_construction(r, k).unwrap();
            let expected_size = k as u64 * ((1 << (2 * r - 2)) - 1 + binomial(2 * r - 1, r)) + 1;
            let expected_width = k as u64 * binomial(2 * r - 1, r);
            assert_eq!(h.len() as u64, expected_size, "size r={r} k={k}");
            let verdict = heavy::is_heavy(&h.maximal_elements()).unwrap();
            assert!(verdict.is_heavy, "r={r} k={k}");
            assert_eq!(verdict.width() as u64, expected_width, "width r={r} k={k}");
            assert_eq!(verdict.downset_size, h.len());
        }
    }

    // Bound coincidences at (r, t) = (3, 10).
    let down_35 = SetFamily::level_of(5, 3).unwrap().downset_closure();
    assert_eq!(heavy::conjecture10_bound(3, 10), Rational::from_integer(26));
    assert_eq!(heavy::r3_bound(10), Rational::from_integer(26));
    assert_eq!(down_35.len(), 26);

    // f_1 and f_2 by search at t <= 4.
    for t in 1..=4u32 {
        assert_eq!(heavy::search_f_r(1, t, t, false).unwrap().best_size as u32, t + 1);
    }
    assert_eq!(heavy::search_f_r(2, 3, 4, false).unwrap().best_size, 7);
    assert_eq!(heavy::search_f_r(2, 4, 4, false).unwrap().best_size, 9);

    // The exhaustive f_3(10) search over [6].
    let result = heavy::search_f_r(3, 10, 6, false).unwrap();
    assert!(result.exhaustive);
    assert_eq!(result.families_examined, 184_756);
    assert_eq!(result.best_size, 26);
    let best = result.best_family.unwrap();
    assert!(heavy::is_heavy(&best).unwrap().is_heavy);

    // Claim-1 cover bounds and the consecutive-level inequality on every
    // heavy instance encountered (prop-fh), plus the r = 3 bound over the
    // full search (prop-r3).
    for id in [StatementId::PropFh, StatementId::PropR3] {
        let report = verify(id, &VerifyParams::default()).unwrap();
        assert_eq!(report.verdict, Verdict::Verified, "{id}: {:?}", report.counterexamples);
    }

    finish("criterion 09 (heavy constructions and searches)", started, Duration::from_secs(1800));
}

/// The conjecture verifiers complete and report; a refutation surfaces as
/// exit code 3 from the CLI rather than failing the suite.
#[test]
fn criterion_10_conjectures_report_without_asserting() {
    let started = Instant::now();
    for n in 1..=5 {
        let report = verify(StatementId::ConjBinaryMinWidth, &params_n(n)).unwrap();
        assert!(
            matches!(report.verdict, Verdict::Verified | Verdict::CounterexampleFound),
            "n={n}"
        );
        if n == 5 {
            assert_eq!(report.instances_checked, 7581);
        }
    }
    for n in 1..=5 {
        let params = if n == 5 {
            VerifyParams { samples: Some(10_000), ..params_n(5) }
        } else {
            params_n(n)
        };
        let report = verify(StatementId::ConjDaykinFrankl, &params).unwrap();
        assert!(
            matches!(report.verdict, Verdict::Verified | Verdict::CounterexampleFound),
            "n={n}"
        );
    }

    // Exit-code surface: 0 for verified, 3 reserved for counterexamples.
    let out = Command::new(env!("CARGO_BIN_EXE_posetw"))
        .args(["verify", "conj-binary-min-width", "-n", "4"])
        .env("POSETW_THREADS", "2")
        .output()
        .unwrap();
    assert!(matches!(out.status.code(), Some(0) | Some(3)));

    finish("criterion 10 (conjecture reports)", started, Duration::from_secs(600));
}

/// Sperner baseline: lattice widths and the Greene-Kleitman partition.
#[test]
fn criterion_11_sperner_baseline() {
    let started = Instant::now();
    for n in 1..=8u32 {
        let b = SetFamily::boolean_lattice(n).unwrap();
        assert_eq!(width(&b).width as u64, binomial(n, n / 2));
    }
    for n in 1..=12u32 {
        let mut minima = std::collections::BTreeSet::new();
        let mut covered = 0u64;
        for bits in 0..1u64 << n {
            let mut cur = SubsetMask::new(bits as u32, n).unwrap();
            while let Some(prev) = gk::chain_predecessor(cur) {
                cur = prev;
            }
            assert!(gk::is_special(cur));
            covered += 1;
            if minima.insert(cur.bits()) {
                let chain = gk::chain_of(cur);
                let (lo, hi) = (chain.first().unwrap(), chain.last().unwrap());
                assert_eq!(lo.cardinality() + hi.cardinality(), n, "symmetric");
                for w in chain.windows(2) {
                    assert!(w[0].is_strict_subset_of(w[1]));
                    assert_eq!(w[1].cardinality(), w[0].cardinality() + 1, "skipless");
                }
            }
        }
        assert_eq!(minima.len() as u64, binomial(n, n / 2), "chain count n={n}");
        assert_eq!(covered, 1 << n);
    }
    finish("criterion 11 (Sperner and Greene-Kleitman baselines)", started, Duration::from_secs(60));
}

/// The three named verifier examples from the interface contract.
#[test]
fn verifier_interface_examples() {
    let report = verify(StatementId::LemmaSpecial, &params_n(6)).unwrap();
    assert_eq!(report.verdict, Verdict::Verified);
    assert_eq!(report.instances_checked, 64);

    let report = verify(StatementId::ThmMaxwidth, &params_n(4)).unwrap();
    assert_eq!(report.verdict, Verdict::Verified);
    assert_eq!(report.instances_checked, 168);

    let report = verify(StatementId::ConjBinaryMinWidth, &params_n(5)).unwrap();
    assert_eq!(report.instances_checked, 7581);

    // Width of C(10) in B(4) agrees across all three routes.
    let c10 = initial_segment(OrderKind::Binary, 10, 4).unwrap();
    assert_eq!(width(&c10).width, 4);
    assert_eq!(gk::special_count(10, 4).unwrap(), 4);
    assert_eq!(goldwasser::goldwasser_width(10), 4);

    // An SD-partition of a downset replayed through the CLI-facing API.
    let p = chains::sd_partition(&c10).unwrap();
    assert_eq!(p.chain_count(), 4);
    assert!(chains::is_skipless_partition(&p));
}
