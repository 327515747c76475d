//! Replays every theorem, proposition and conjecture as a quantified
//! check over exhaustive or sampled instances, producing machine-readable
//! reports.
//!
//! Theorem verifiers are expected to come back `Verified`; the two
//! conjecture verifiers report rather than assert, and a counterexample
//! from them is a finding, not a failure. Reports are reproducible: all
//! sampling is seeded per instance index, so shard splits and thread
//! counts cannot change what gets checked.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use core::fmt;
use core::str::FromStr;

use crate::compress::{self};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::gk;
use crate::goldwasser;
use crate::heavy;
use crate::mask::SubsetMask;
use crate::order::{self, binomial, OrderKind};
use crate::width::width;
use crate::{chains, Rational};

/// Every statement with a verifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StatementId {
    /// Downsets: `w(A) <= w(I)` for the level-colex segment `I`.
    ThmMaxwidth,
    /// Downsets: `m(A) <= m(I)`.
    ThmMaxmax,
    /// Fully compressed families classify; compression monotone.
    LemmaCompression,
    /// `w(C(d))` equals the special-point count.
    LemmaSpecial,
    /// Width steps along the binary order happen exactly at specials.
    PropSpecial,
    /// `alpha(C(d)) <= alpha(B(n))`, with equality at `d = 2^n`.
    ThmAlpha,
    /// Closed form and witness antichain for `w(C(d))`.
    PropGoldwasser,
    /// Convex families admit width-many skipless chain partitions.
    ThmSd,
    /// Inserting a maximal element keeps the width iff a path augments.
    PropGeneral,
    /// Binary downsets minimize width at every size (conjecture).
    ConjBinaryMinWidth,
    /// Convex density `w(C)/|C| >= w(B(n))/2^n` (conjecture).
    ConjDaykinFrankl,
    /// `f_3(t) <= 2.5 t + 1` over every heavy instance searched.
    PropR3,
    /// `f_r(t) <= t (r/3 + 4 sqrt r)`, cover and level-ratio bounds.
    PropFh,
}

impl StatementId {
    pub const ALL: [StatementId; 13] = [
        StatementId::ThmMaxwidth,
        StatementId::ThmMaxmax,
        StatementId::LemmaCompression,
        StatementId::LemmaSpecial,
        StatementId::PropSpecial,
        StatementId::ThmAlpha,
        StatementId::PropGoldwasser,
        StatementId::ThmSd,
        StatementId::PropGeneral,
        StatementId::ConjBinaryMinWidth,
        StatementId::ConjDaykinFrankl,
        StatementId::PropR3,
        StatementId::PropFh,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StatementId::ThmMaxwidth => "thm-maxwidth",
            StatementId::ThmMaxmax => "thm-maxmax",
            StatementId::LemmaCompression => "lemma-compression",
            StatementId::LemmaSpecial => "lemma-special",
            StatementId::PropSpecial => "prop-special",
            StatementId::ThmAlpha => "thm-alpha",
            StatementId::PropGoldwasser => "prop-goldwasser",
            StatementId::ThmSd => "thm-sd",
            StatementId::PropGeneral => "prop-general",
            StatementId::ConjBinaryMinWidth => "conj-binary-min-width",
            StatementId::ConjDaykinFrankl => "conj-daykin-frankl",
            StatementId::PropR3 => "prop-r3",
            StatementId::PropFh => "prop-fh",
        }
    }

    /// Conjecture verifiers report; they are not expected to verify.
    pub fn is_conjecture(self) -> bool {
        matches!(self, StatementId::ConjBinaryMinWidth | StatementId::ConjDaykinFrankl)
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StatementId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StatementId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or(Error::UnknownStatement)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Verdict {
    Verified,
    CounterexampleFound,
    Skipped,
}

/// One shard of a partitioned run; the default covers everything.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shard {
    pub index: u64,
    pub count: u64,
}

impl Default for Shard {
    fn default() -> Self {
        Shard { index: 0, count: 1 }
    }
}

impl Shard {
    #[inline]
    fn covers(self, instance: u64) -> bool {
        instance % self.count == self.index
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyParams {
    /// Ground size, where the statement ranges over one.
    pub n: Option<u32>,
    /// Sample count for the sampled ranges; verifier-specific default.
    pub samples: Option<u64>,
    /// Base seed for sampled instances.
    pub seed: u64,
    pub shard: Shard,
    /// Overrides search-space guards.
    pub force: bool,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams { n: None, samples: None, seed: 0, shard: Shard::default(), force: false }
    }
}

/// Machine-readable outcome of one statement check.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct VerificationReport {
    pub statement_id: String,
    /// Rendered parameter range, e.g. `n=5` or `d<65536`.
    pub params: String,
    pub instances_checked: u64,
    /// Serialized failing instances, sorted lexicographically so that
    /// sharded runs merge into byte-identical reports.
    pub counterexamples: Vec<String>,
    /// Wall time; filled in by the caller, zero from the pure core.
    pub elapsed_ms: u64,
    pub verdict: Verdict,
}

/// Collects instances and failures.
struct Collector {
    shard: Shard,
    next_instance: u64,
    checked: u64,
    counterexamples: Vec<String>,
}

impl Collector {
    fn new(shard: Shard) -> Self {
        Collector { shard, next_instance: 0, checked: 0, counterexamples: Vec::new() }
    }

    /// Runs `check` on this instance if the shard covers it; `check`
    /// returns a description of the failure, if any.
    fn instance(&mut self, check: impl FnOnce() -> Option<String>) {
        let idx = self.next_instance;
        self.next_instance += 1;
        if !self.shard.covers(idx) {
            return;
        }
        self.checked += 1;
        if let Some(description) = check() {
            self.counterexamples.push(description);
        }
    }

    fn finish(self, id: StatementId, params: String) -> VerificationReport {
        let mut ces = self.counterexamples;
        ces.sort_unstable();
        let verdict = if self.checked == 0 {
            Verdict::Skipped
        } else if ces.is_empty() {
            Verdict::Verified
        } else {
            Verdict::CounterexampleFound
        };
        VerificationReport {
            statement_id: String::from(id.as_str()),
            params,
            instances_checked: self.checked,
            counterexamples: ces,
            elapsed_ms: 0,
            verdict,
        }
    }
}

/// Merges shard reports of one statement into what a single full run
/// would produce; `elapsed_ms` becomes the maximum over the parts.
pub fn merge_reports(parts: Vec<VerificationReport>) -> Option<VerificationReport> {
    let mut iter = parts.into_iter();
    let mut merged = iter.next()?;
    for part in iter {
        debug_assert_eq!(part.statement_id, merged.statement_id);
        debug_assert_eq!(part.params, merged.params);
        merged.instances_checked += part.instances_checked;
        merged.counterexamples.extend(part.counterexamples);
        merged.elapsed_ms = merged.elapsed_ms.max(part.elapsed_ms);
    }
    merged.counterexamples.sort_unstable();
    merged.verdict = if merged.instances_checked == 0 {
        Verdict::Skipped
    } else if merged.counterexamples.is_empty() {
        Verdict::Verified
    } else {
        Verdict::CounterexampleFound
    };
    Some(merged)
}

fn render_family(f: &SetFamily) -> String {
    let mut out = format!("n={}", f.ground_size());
    for m in f.members() {
        out.push(' ');
        out.push_str(&format!("{m}"));
    }
    out
}

/// Runs the verifier for `id`. `elapsed_ms` is left at zero; callers with
/// a clock fill it in.
pub fn verify(id: StatementId, params: &VerifyParams) -> Result<VerificationReport> {
    match id {
        StatementId::ThmMaxwidth => verify_max_over_downsets(id, params, false),
        StatementId::ThmMaxmax => verify_max_over_downsets(id, params, true),
        StatementId::LemmaCompression => verify_lemma_compression(params),
        StatementId::LemmaSpecial => verify_lemma_special(params),
        StatementId::PropSpecial => verify_prop_special(params),
        StatementId::ThmAlpha => verify_thm_alpha(params),
        StatementId::PropGoldwasser => verify_prop_goldwasser(params),
        StatementId::ThmSd => verify_thm_sd(params),
        StatementId::PropGeneral => verify_prop_general(params),
        StatementId::ConjBinaryMinWidth => verify_conj_binary_min_width(params),
        StatementId::ConjDaykinFrankl => verify_conj_daykin_frankl(params),
        StatementId::PropR3 => verify_prop_r3(params),
        StatementId::PropFh => verify_prop_fh(params),
    }
}

/// `w(A) <= w(I)` and `m(A) <= m(I)` over every downset of `B(n)`.
fn verify_max_over_downsets(
    id: StatementId,
    params: &VerifyParams,
    maximals: bool,
) -> Result<VerificationReport> {
    let n = params.n.unwrap_or(4);
    // Caps of the level-colex segments, one per size.
    let mut seg_value = Vec::with_capacity((1usize << n) + 1);
    for d in 0..=1u64 << n {
        let seg = order::initial_segment(OrderKind::LevelColex, d, n)?;
        seg_value.push(if maximals { seg.maximal_elements().len() } else { width(&seg).width });
    }
    let mut col = Collector::new(params.shard);
    for bitmap in enumerate::downset_bitmaps(n)? {
        col.instance(|| {
            let d = enumerate::family_from_bitmap(n, bitmap);
            let value =
                if maximals { d.maximal_elements().len() } else { width(&d).width };
            let cap = seg_value[d.len()];
            (value > cap).then(|| {
                format!("value {value} > segment value {cap} for {}", render_family(&d))
            })
        });
    }
    Ok(col.finish(id, format!("n={n}")))
}

/// Compression over every family of `B(4)` (or samples at `n = 5`):
/// effective steps lower the level-colex rank sum, downsets keep downset
/// and never lose maximal elements, and every fixed point classifies.
fn verify_lemma_compression(params: &VerifyParams) -> Result<VerificationReport> {
    let n = params.n.unwrap_or(4);
    if n > 5 {
        return Err(Error::EnumerationGuard { n, max: 5 });
    }
    let mut col = Collector::new(params.shard);
    let run = |f: SetFamily| -> Option<String> {
        let is_downset = f.is_downset();
        let mut failure: Option<String> = None;
        let (fixed, _steps) = compress::compress_fully_with(&f, |i, before, after| {
            if failure.is_some() {
                return;
            }
            if after.len() != before.len() {
                failure = Some(format!("C_{i} changed the size of {}", render_family(before)));
            } else if compress::level_colex_rank_sum(after)
                >= compress::level_colex_rank_sum(before)
            {
                failure =
                    Some(format!("C_{i} did not lower the rank sum of {}", render_family(before)));
            } else if is_downset {
                if !after.is_downset() {
                    failure = Some(format!("C_{i} broke downset {}", render_family(before)));
                } else if after.maximal_elements().len() < before.maximal_elements().len() {
                    failure = Some(format!(
                        "C_{i} lost maximal elements of {}",
                        render_family(before)
                    ));
                }
            }
        });
        if failure.is_some() {
            return failure;
        }
        match compress::classify_fixed_point(&fixed) {
            Ok(_) => None,
            Err(_) => Some(format!(
                "unclassifiable fixed point {} from {}",
                render_family(&fixed),
                render_family(&f)
            )),
        }
    };

    if n <= 4 {
        let size = 1u32 << n;
        for bitmap in 0..1u64 << size {
            col.instance(|| run(enumerate::family_from_bitmap(n, bitmap)));
        }
    } else {
        let samples = params.samples.unwrap_or(1_000_000);
        for idx in 0..samples {
            col.instance(|| run(enumerate::sample_family(n, params.seed, idx).unwrap()));
        }
    }
    Ok(col.finish(StatementId::LemmaCompression, format!("n={n}")))
}

/// `special_count(d, n)` equals the oracle width of `C(d)` for every `d`.
fn verify_lemma_special(params: &VerifyParams) -> Result<VerificationReport> {
    let n = params.n.unwrap_or(6);
    if n > 10 {
        return Err(Error::EnumerationGuard { n, max: 10 });
    }
    let mut col = Collector::new(params.shard);
    for d in 1..=1u64 << n {
        col.instance(|| {
            let c = order::initial_segment(OrderKind::Binary, d, n).unwrap();
            let via_chains = gk::special_count(d, n).unwrap();
            let via_oracle = width(&c).width as u64;
            (via_chains != via_oracle).then(|| {
                format!("d={d}: special count {via_chains}, oracle width {via_oracle}")
            })
        });
    }
    Ok(col.finish(StatementId::LemmaSpecial, format!("n={n}")))
}

/// Width increments along the binary order happen exactly at special
/// points: oracle widths for `n <= 8`, and consistency of the increment
/// list with the streaming count for larger `n`.
fn verify_prop_special(params: &VerifyParams) -> Result<VerificationReport> {
    let n = params.n.unwrap_or(6);
    if n > 12 {
        return Err(Error::EnumerationGuard { n, max: 12 });
    }
    let points = gk::width_increment_points(n)?;
    let mut col = Collector::new(params.shard);
    if n <= 8 {
        let mut previous_width = 0u64;
        let mut prefix: Vec<u32> = Vec::with_capacity(1 << n);
        for bits in 0..1u64 << n {
            prefix.push(bits as u32);
            let family = SetFamily::from_bits(n, prefix.clone()).unwrap();
            let w = width(&family).width as u64;
            let stepped = w == previous_width + 1;
            let is_special = gk::is_special(SubsetMask::new(bits as u32, n).unwrap());
            col.instance(|| {
                (stepped != is_special || w > previous_width + 1).then(|| {
                    format!(
                        "at {} width went {previous_width} -> {w}, special: {is_special}",
                        SubsetMask::new(bits as u32, n).unwrap()
                    )
                })
            });
            previous_width = w;
        }
    } else {
        let mut count_so_far = 0u64;
        for d in 1..=1u64 << n {
            let is_point = points.binary_search_by_key(&((d - 1) as u32), |m| m.bits()).is_ok();
            if is_point {
                count_so_far += 1;
            }
            let expected = count_so_far;
            col.instance(|| {
                let counted = gk::special_count(d, n).unwrap();
                (counted != expected)
                    .then(|| format!("d={d}: streaming count {counted}, increments {expected}"))
            });
        }
    }
    Ok(col.finish(StatementId::PropSpecial, format!("n={n}")))
}

/// `alpha(C(d)) <= alpha(B(n))` for every `d`, exactly, with equality at
/// `d = 2^n`.
fn verify_thm_alpha(params: &VerifyParams) -> Result<VerificationReport> {
    let n = params.n.unwrap_or(8);
    if n > 24 {
        return Err(Error::EnumerationGuard { n, max: 24 });
    }
    let lattice_width = binomial(n, n / 2) as u128;
    let total = 1u128 << n;
    let mut col = Collector::new(params.shard);
    let mut specials = 0u128;
    for d in 1..=1u64 << n {
        if gk::is_special(SubsetMask::new((d - 1) as u32, n)?) {
            specials += 1;
        }
        let s = specials;
        col.instance(|| {
            // d / s <= 2^n / w(B(n)), cross-multiplied.
            let violated = d as u128 * lattice_width > total * s;
            let equality_missed = d as u128 == total && d as u128 * lattice_width != total * s;
            (violated || equality_missed)
                .then(|| format!("d={d}: alpha = {d}/{s} vs {total}/{lattice_width}"))
        });
    }
    Ok(col.finish(StatementId::ThmAlpha, format!("n={n}")))
}

/// The closed form matches the streaming special count for every
/// `d < 2^16`, and the witness antichain is sound for every `d < 2^12`.
fn verify_prop_goldwasser(params: &VerifyParams) -> Result<VerificationReport> {
    let width_limit: u64 = 1 << 16;
    let witness_limit: u64 = 1 << 12;
    let n_width = 16;
    let n_witness = 12;
    let mut col = Collector::new(params.shard);

    let mut specials = 0u64;
    for d in 1..width_limit {
        if gk::is_special(SubsetMask::new((d - 1) as u32, n_width)?) {
            specials += 1;
        }
        let s = specials;
        col.instance(|| {
            let closed = goldwasser::goldwasser_width(d);
            (closed != s).then(|| format!("d={d}: closed form {closed}, special count {s}"))
        });
    }
    for d in 1..witness_limit {
        col.instance(|| {
            let a = match goldwasser::goldwasser_antichain(d, n_witness) {
                Ok(a) => a,
                Err(e) => return Some(format!("d={d}: witness construction failed: {e}")),
            };
            let sound = a.is_antichain()
                && a.len() as u64 == goldwasser::goldwasser_width(d)
                && a.bits().iter().all(|&b| (b as u64) < d);
            (!sound).then(|| format!("d={d}: unsound witness {}", render_family(&a)))
        });
    }
    Ok(col.finish(
        StatementId::PropGoldwasser,
        format!("d<{width_limit} widths, d<{witness_limit} witnesses"),
    ))
}

/// Every convex family splits into width-many skipless chains:
/// exhaustive for `n <= 3`, sampled above.
fn verify_thm_sd(params: &VerifyParams) -> Result<VerificationReport> {
    let n = params.n.unwrap_or(3);
    if n > 6 {
        return Err(Error::EnumerationGuard { n, max: 6 });
    }
    let mut col = Collector::new(params.shard);
    let run = |c: SetFamily| -> Option<String> {
        let p = match chains::sd_partition(&c) {
            Ok(p) => p,
            Err(e) => return Some(format!("partition failed on {}: {e}", render_family(&c))),
        };
        let w = width(&c).width;
        if p.chain_count() != w {
            return Some(format!(
                "{} chains for width {w} on {}",
                p.chain_count(),
                render_family(&c)
            ));
        }
        if !chains::is_skipless_partition(&p) {
            return Some(format!("chains not skipless on {}", render_family(&c)));
        }
        None
    };
    if n <= 3 {
        for c in enumerate::enumerate_convex(n)? {
            col.instance(|| run(c.clone()));
        }
    } else {
        let samples = params.samples.unwrap_or(10_000);
        for idx in 0..samples {
            col.instance(|| run(enumerate::sample_convex(n, params.seed, idx).unwrap()));
        }
    }
    Ok(col.finish(StatementId::ThmSd, format!("n={n}")))
}

/// Replays random downsets one insertion at a time: the augmenting-path
/// verdict must match the oracle width delta, and the maintained
/// partition stays a width-sized skipless partition.
fn verify_prop_general(params: &VerifyParams) -> Result<VerificationReport> {
    let n = params.n.unwrap_or(8);
    if n > 10 {
        return Err(Error::EnumerationGuard { n, max: 10 });
    }
    let samples = params.samples.unwrap_or(1000);
    let mut col = Collector::new(params.shard);
    for idx in 0..samples {
        col.instance(|| {
            let d = enumerate::sample_downset(n, params.seed, idx).unwrap();
            let mut partition =
                chains::sd_partition(&SetFamily::empty(n).unwrap()).unwrap();
            let mut oracle_width = 0usize;
            for y in d.members() {
                let (next, grew) = match chains::insert_and_update(&partition, y) {
                    Ok(r) => r,
                    Err(e) => return Some(format!("insert {y} failed: {e}")),
                };
                let w = width(next.family()).width;
                let expected_grow = w == oracle_width + 1;
                if grew != expected_grow
                    || next.chain_count() != w
                    || !chains::is_skipless_partition(&next)
                {
                    return Some(format!(
                        "inserting {y} into sample {idx}: verdict {grew}, width {oracle_width} -> {w}"
                    ));
                }
                oracle_width = w;
                partition = next;
            }
            None
        });
    }
    Ok(col.finish(StatementId::PropGeneral, format!("n={n} samples={samples}")))
}

/// Conjecture: every downset is at least as wide as the binary downset of
/// its size. Reported, never asserted.
fn verify_conj_binary_min_width(params: &VerifyParams) -> Result<VerificationReport> {
    let n = params.n.unwrap_or(4);
    let mut col = Collector::new(params.shard);
    for bitmap in enumerate::downset_bitmaps(n)? {
        col.instance(|| {
            let d = enumerate::family_from_bitmap(n, bitmap);
            if d.is_empty() {
                return None;
            }
            let w = width(&d).width as u64;
            let floor = goldwasser::goldwasser_width(d.len() as u64);
            (w < floor).then(|| {
                format!("width {w} below binary width {floor}: {}", render_family(&d))
            })
        });
    }
    Ok(col.finish(StatementId::ConjBinaryMinWidth, format!("n={n}")))
}

/// Conjecture: `w(C)/|C| >= w(B(n))/2^n` for convex `C`. Exhaustive for
/// `n <= 4`, sampled above; reported, never asserted.
fn verify_conj_daykin_frankl(params: &VerifyParams) -> Result<VerificationReport> {
    let n = params.n.unwrap_or(4);
    if n > 6 {
        return Err(Error::EnumerationGuard { n, max: 6 });
    }
    let lattice_width = binomial(n, n / 2) as u128;
    let total = 1u128 << n;
    let mut col = Collector::new(params.shard);
    let run = |c: SetFamily| -> Option<String> {
        if c.is_empty() {
            return None;
        }
        let w = width(&c).width as u128;
        // w / |C| >= w(B(n)) / 2^n, cross-multiplied.
        (w * total < lattice_width * c.len() as u128).then(|| {
            format!("density {w}/{} below {lattice_width}/{total}: {}", c.len(), render_family(&c))
        })
    };
    if n <= 4 {
        for c in enumerate::enumerate_convex(n)? {
            col.instance(|| run(c.clone()));
        }
    } else {
        let samples = params.samples.unwrap_or(10_000);
        for idx in 0..samples {
            col.instance(|| run(enumerate::sample_convex(n, params.seed, idx).unwrap()));
        }
    }
    Ok(col.finish(StatementId::ConjDaykinFrankl, format!("n={n}")))
}

/// `f_3(t) <= 2.5 t + 1` on every heavy instance in the exhaustive
/// `t = 10` search over `[6]`, which also pins `f_3(10) = 26`.
///
/// Instances are the candidate families examined; sharding splits the
/// enumeration itself, so the `f_3(10) = 26` maximum is only asserted on
/// unsharded runs.
fn verify_prop_r3(params: &VerifyParams) -> Result<VerificationReport> {
    let mut failures: Vec<String> = Vec::new();
    let result = heavy::search_f_r_sharded(
        3,
        10,
        6,
        params.force,
        params.shard.index,
        params.shard.count,
        |family, down| {
            let bound = heavy::r3_bound(family.len() as u64);
            if Rational::from_integer(down.len() as i128) > bound {
                failures.push(format!(
                    "downset size {} beats 2.5t+1 for {}",
                    down.len(),
                    render_family(family)
                ));
            }
            if !heavy::consecutive_level_check(down) {
                failures.push(format!("level ratios fail for {}", render_family(family)));
            }
        },
    )?;
    if params.shard.count == 1 && result.best_size != 26 {
        failures.push(format!("f_3(10) search returned {}", result.best_size));
    }
    let verdict = if failures.is_empty() { Verdict::Verified } else { Verdict::CounterexampleFound };
    Ok(VerificationReport {
        statement_id: String::from(StatementId::PropR3.as_str()),
        params: String::from("r=3 t=10 n_max=6"),
        instances_checked: result.families_examined,
        counterexamples: failures,
        elapsed_ms: 0,
        verdict,
    })
}

/// The proved `f_r` bound, the cover bound, and the level-ratio and
/// halving inequalities, on constructed heavy downsets and the small
/// exhaustive searches.
fn verify_prop_fh(params: &VerifyParams) -> Result<VerificationReport> {
    let mut col = Collector::new(params.shard);

    // Constructed instances, r <= 4, k <= 3 within the ground cap.
    for r in 1..=4u32 {
        for k in 1..=3u32 {
            if k * (2 * r - 1) > 32 {
                continue;
            }
            col.instance(|| {
                let h = heavy::heavy_construction(r, k).unwrap();
                let t = k as u64 * binomial(2 * r - 1, r);
                let verdict = heavy::is_heavy(&h.maximal_elements()).unwrap();
                if !verdict.is_heavy || verdict.t as u64 != t {
                    return Some(format!("construction r={r} k={k} is not heavy"));
                }
                if Rational::from_integer(h.len() as i128) > heavy::fh_bound(r, t) {
                    return Some(format!("construction r={r} k={k} beats the f_h bound"));
                }
                if !heavy::consecutive_level_check(&h) {
                    return Some(format!("level ratios fail for construction r={r} k={k}"));
                }
                // Cover bound for every member below the top.
                for x in h.members() {
                    if x.cardinality() >= r {
                        continue;
                    }
                    let c = heavy::min_upper_cover_count(&h, x).unwrap();
                    if !c.holds {
                        return Some(format!(
                            "cover bound fails at {x} in construction r={r} k={k}"
                        ));
                    }
                }
                None
            });
        }
    }

    // Halving: r a perfect square >= 9 with the index range nonempty; on
    // a 32-element ground that is exactly r = 9, k = 1, where only i = 0
    // qualifies. Checked on level counts.
    col.instance(|| {
        let r = 9u32;
        let h = heavy::heavy_construction(r, 1).unwrap();
        let sizes = h.level_sizes();
        let sqrt_r = 3u32;
        let hi = 2 * r / 3 - 2 * sqrt_r;
        for i in 0..=hi as usize {
            if 2 * sizes[i] > sizes[i + 2 * sqrt_r as usize] {
                return Some(format!("halving fails at level {i} for r=9"));
            }
        }
        None
    });

    // Exhaustive small searches; every heavy instance obeys the bounds.
    for (r, t, n_max) in [(1, 2, 2), (2, 3, 4), (2, 4, 4)] {
        let mut found: Vec<(SetFamily, SetFamily)> = Vec::new();
        heavy::search_f_r_sharded(r, t, n_max, params.force, 0, 1, |family, down| {
            found.push((family.clone(), down.clone()));
        })?;
        for (family, down) in found {
            col.instance(|| {
                let t = family.len() as u64;
                if Rational::from_integer(down.len() as i128) > heavy::fh_bound(r, t) {
                    return Some(format!("f_h bound fails for {}", render_family(&family)));
                }
                if down.len() as u64 > r as u64 * t + 1 {
                    return Some(format!("trivial cap fails for {}", render_family(&family)));
                }
                if !heavy::consecutive_level_check(&down) {
                    return Some(format!("level ratios fail for {}", render_family(&family)));
                }
                None
            });
        }
    }
    Ok(col.finish(StatementId::PropFh, String::from("constructions and searches")))
}
