//! Verification suites: each check is one row with a pass flag and a short
//! deterministic detail string.

use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::automorphisms::{diagram_conj_check, AutTable, Automorphism};
use crate::chevgroup::{classical, ChevalleyGroup, ClassicalKind};
use crate::error::{Error, Result};
use crate::group::{center, GroupRef};
use crate::intmatrix::IntMatrix;
use crate::liealgebra::ChevalleyBasis;
use crate::matrix::GroupElement;
use crate::rootsystem::RootSystem;
use crate::scalars::PrimeField;
use crate::torusfixed::{case_witness, WitnessKind};
use crate::twisted::{
    additive_multiplicative_shadow, borel2_analysis, coincidence_surjective, conjugacy_class_count,
    diagonal_inverse_check, diagonal_unipotent_shadow, fixed_subgroup, inner_shift_check,
    product_twist_analysis, reidemeister, ses_check, solve_unipotent, unipo_analysis,
};

pub const SCHEMA_VERSION: u32 = 1;

/// `|Gamma|` per Dynkin type.
pub const GAMMA_ORDERS: [(char, usize, usize); 17] = [
    ('A', 1, 1),
    ('A', 2, 2),
    ('A', 3, 2),
    ('A', 4, 2),
    ('A', 5, 2),
    ('A', 6, 2),
    ('B', 2, 1),
    ('B', 3, 1),
    ('C', 3, 1),
    ('D', 4, 6),
    ('D', 5, 2),
    ('E', 6, 2),
    ('E', 7, 1),
    ('E', 8, 1),
    ('F', 4, 1),
    ('G', 2, 1),
    ('D', 6, 2),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    PaperExamples,
    Lemmas,
    ChevalleyRelations,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "paper-examples" => Self::PaperExamples,
            "lemmas" => Self::Lemmas,
            "chevalley-relations" => Self::ChevalleyRelations,
            "all" => Self::All,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::PaperExamples => "paper-examples",
            Self::Lemmas => "lemmas",
            Self::ChevalleyRelations => "chevalley-relations",
            Self::All => "all",
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    pub cap: usize,
    pub cache_dir: Option<PathBuf>,
    /// Restricts `chevalley-relations` to one `(type, rank, p)`.
    pub only: Option<(char, usize, u32)>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { seed: 1, cap: crate::group::DEFAULT_CAP, cache_dir: None, only: None }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub suite: String,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub suite: String,
    pub seed: u64,
    pub pass: bool,
    pub checks: Vec<CheckRow>,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,name,pass,detail\n");
        for c in &self.checks {
            out.push_str(&format!("{},{},{},{}\n", csv(&c.suite), csv(&c.name), c.pass, csv(&c.detail)));
        }
        out
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn csv(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// An RNG per named check, so results do not depend on which suites ran.
fn rng_for(seed: u64, tag: &str) -> ChaCha8Rng {
    let h = tag.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

struct Rows {
    suite: &'static str,
    rows: Vec<CheckRow>,
}

impl Rows {
    fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.rows.push(CheckRow { suite: self.suite.into(), name: name.into(), pass, detail: detail.into() });
    }

    fn push_result(&mut self, name: impl Into<String>, r: Result<(bool, String)>) {
        match r {
            Ok((pass, detail)) => self.push(name, pass, detail),
            Err(e) => self.push(name, false, format!("error: {e}")),
        }
    }
}

pub fn run(suite: Suite, cfg: &VerifyConfig) -> VerifyReport {
    let mut checks = Vec::new();
    let suites: Vec<Suite> = match suite {
        Suite::All => vec![Suite::ChevalleyRelations, Suite::Lemmas, Suite::PaperExamples],
        s => vec![s],
    };
    for s in suites {
        let mut rows = Rows { suite: s.name(), rows: Vec::new() };
        match s {
            Suite::ChevalleyRelations => chevalley_suite(&mut rows, cfg),
            Suite::Lemmas => lemma_suite(&mut rows, cfg),
            Suite::PaperExamples => example_suite(&mut rows, cfg),
            Suite::All => unreachable!(),
        }
        checks.extend(rows.rows);
    }
    VerifyReport {
        schema: SCHEMA_VERSION,
        suite: suite.name().into(),
        seed: cfg.seed,
        pass: checks.iter().all(|c| c.pass),
        checks,
    }
}

fn basis(c: char, n: usize, cfg: &VerifyConfig) -> Result<(RootSystem, ChevalleyBasis)> {
    let rs = RootSystem::from_label(c, n)?;
    let cb = ChevalleyBasis::load_or_compute(&rs, cfg.cache_dir.as_deref())?;
    Ok((rs, cb))
}

// ---- Chevalley relations, structure constants, Gamma ----------------------

fn chevalley_suite(rows: &mut Rows, cfg: &VerifyConfig) {
    let configs: Vec<(char, usize, u32)> = match cfg.only {
        Some(c) => vec![c],
        None => [('A', 1), ('A', 2), ('A', 3), ('D', 4)]
            .iter()
            .flat_map(|&(c, n)| [2u32, 3, 5].map(|p| (c, n, p)))
            .collect(),
    };
    for (c, n, p) in configs {
        rows.push_result(format!("relations {c}{n} p={p}"), (|| {
            let (_, cb) = basis(c, n, cfg)?;
            let rep = ChevalleyGroup::new(&cb, PrimeField::new(p)?)?.relations_check()?;
            Ok((rep.pass, detail_of(rep.checked, &rep.counterexample)))
        })());
    }
    if cfg.only.is_some() {
        return;
    }
    for (c, n, expected) in GAMMA_ORDERS {
        rows.push_result(format!("gamma {c}{n}"), (|| {
            let got = RootSystem::from_label(c, n)?.diagram_automorphisms().len();
            Ok((got == expected, format!("order {got}, expected {expected}")))
        })());
    }
    for (c, n) in [('A', 1), ('A', 2), ('A', 3), ('D', 4), ('G', 2)] {
        rows.push_result(format!("structure constants {c}{n}"), (|| {
            let (_, cb) = basis(c, n, cfg)?;
            let constants = cb.constant_violation().is_none();
            let jacobi = cb.jacobi_violation().is_none();
            let divided = divided_powers_integral(&cb, 4);
            Ok((
                constants && jacobi && divided,
                format!("antisymmetry and |N|=p+1: {constants}; Jacobi: {jacobi}; ad^k/k! integral for k<=4: {divided}"),
            ))
        })());
    }
    for (c, n) in [('A', 2), ('A', 3), ('D', 4), ('E', 6)] {
        let Ok((rs, cb)) = basis(c, n, cfg) else {
            rows.push(format!("diagram {c}{n}"), false, "root system construction failed");
            continue;
        };
        let cg = match ChevalleyGroup::new(&cb, PrimeField::new(5).unwrap()) {
            Ok(g) => g,
            Err(e) => {
                rows.push(format!("diagram {c}{n}"), false, format!("error: {e}"));
                continue;
            }
        };
        for rho in rs.diagram_automorphisms().into_iter().filter(|r| !r.is_identity()) {
            rows.push_result(format!("diagram {c}{n} {} p=5", rho.cycles()), (|| {
                let rep = diagram_conj_check(&cg, &rho)?;
                Ok((
                    rep.pass,
                    format!(
                        "root subgroups {}, torus {}, torus word {}, eps=1 on simple roots {}, signed torus form {}",
                        rep.root_subgroups.pass,
                        rep.torus.pass,
                        rep.torus_word.pass,
                        rep.eps_one_on_simple,
                        if rep.torus_signed_literal.pass { "holds" } else { "fails (eps=-1 root with h(-1) != 1)" }
                    ),
                ))
            })());
        }
    }
}

fn detail_of(checked: usize, cex: &Option<String>) -> String {
    match cex {
        None => format!("{checked} cases"),
        Some(c) => format!("{checked} cases, first failure: {c}"),
    }
}

/// `ad(e_a)^k` is divisible by `k!` for `k <= max_k` and every root.
pub fn divided_powers_integral(cb: &ChevalleyBasis, max_k: i64) -> bool {
    let nr = cb.root_system().roots().len();
    (0..nr).all(|a| {
        let ad = cb.ad_matrix_by_index(a);
        let mut pow = IntMatrix::identity(cb.dim());
        let mut fact = 1i64;
        (1..=max_k).all(|k| {
            pow = pow.mul(&ad);
            fact *= k;
            pow.entries().iter().all(|v| v % fact == 0)
        })
    })
}

// ---- lemmas -----------------------------------------------------------------

fn automorphism_pool(spec: &str, g: &GroupRef) -> Vec<Automorphism> {
    let f = g.element_matrix(g.identity()).unwrap().field();
    let mut pool = vec![Automorphism::Identity];
    match spec {
        "D:2:5" => {
            pool.push(Automorphism::DiagonalInverse);
            pool.push(Automorphism::DiagonalCycleTwist { r: 1 });
            pool.push(Automorphism::DiagonalCycleTwist { r: 2 });
        }
        "U:3:3" => pool.push(Automorphism::Conjugation(GroupElement::diagonal(f, &[1, 2, 1]))),
        _ => pool.push(Automorphism::Conjugation(GroupElement::diagonal(f, &[2, 1]))),
    }
    pool
}

fn random_automorphism(rng: &mut ChaCha8Rng, spec: &str, g: &GroupRef) -> Automorphism {
    let mut pool = automorphism_pool(spec, g);
    let x = rng.gen_range(0..g.order());
    pool.push(Automorphism::Inner(g.element_matrix(x).unwrap()));
    pool.choose(rng).unwrap().clone()
}

fn group(spec: &str, cap: usize) -> Result<GroupRef> {
    Ok(crate::dsl::parse_group(spec, cap, None)?.group)
}

/// `R(phi o Int_g) = R(phi)` for `trials` random pairs.
pub fn inner_shift_trials(spec: &str, trials: usize, cfg: &VerifyConfig) -> Result<(bool, String)> {
    let g = group(spec, cfg.cap)?;
    let mut rng = rng_for(cfg.seed, &format!("inner-shift {spec}"));
    let mut ok = 0;
    let mut first_fail = None;
    for _ in 0..trials {
        let phi = AutTable::new(g.clone(), random_automorphism(&mut rng, spec, &g))?;
        let x = rng.gen_range(0..g.order());
        let rep = inner_shift_check(&phi, x);
        if rep.pass {
            ok += 1;
        } else if first_fail.is_none() {
            first_fail = Some(format!("{} with g={}", phi.descriptor(), rep.g));
        }
    }
    let detail = match first_fail {
        None => format!("{ok}/{trials} equal"),
        Some(f) => format!("{ok}/{trials} equal; first failure {f}"),
    };
    Ok((ok == trials, detail))
}

/// Exact-sequence check for `SL_2 -> PSL_2` with inner automorphisms.
pub fn ses_trials(p: u32, trials: usize, cfg: &VerifyConfig) -> Result<(bool, String)> {
    let g = classical(ClassicalKind::SL, 2, p, cfg.cap)?;
    let z = center(g.as_ref());
    let mut rng = rng_for(cfg.seed, &format!("ses {p}"));
    let mut pairs = Vec::new();
    let mut all = true;
    for _ in 0..trials {
        let x = rng.gen_range(0..g.order());
        let phi = AutTable::new(g.clone(), Automorphism::Inner(g.element_matrix(x).unwrap()))?;
        let rep = ses_check(&phi, &z)?;
        all &= rep.pass;
        pairs.push(format!("{}>={}", rep.r_phi, rep.r_quotient));
    }
    pairs.dedup();
    Ok((all, format!("R(phi)>=R(phi_bar): {}", pairs.join(" "))))
}

fn lemma_suite(rows: &mut Rows, cfg: &VerifyConfig) {
    for spec in ["SL:2:3", "U:3:3", "D:2:5", "B2:3"] {
        rows.push_result(format!("inner shift {spec}"), inner_shift_trials(spec, 20, cfg));
    }
    for p in [3, 5] {
        rows.push_result(format!("exact sequence SL_2(F_{p}) -> PSL_2(F_{p})"), ses_trials(p, 5, cfg));
    }
    let product_configs: Vec<(&str, Vec<Automorphism>, &str)> = vec![
        ("SL:2:3", vec![Automorphism::Identity, Automorphism::Identity], "identity;identity"),
        ("D:1:7", vec![Automorphism::DiagonalInverse, Automorphism::Identity], "inverse;identity"),
        ("D:1:7", vec![Automorphism::DiagonalInverse, Automorphism::DiagonalInverse], "inverse;inverse"),
    ];
    for (spec, phis, label) in product_configs {
        rows.push_result(format!("product twist {spec} n=2 sigma=(1 2) {label}"), (|| {
            let g = group(spec, cfg.cap)?;
            let rep = product_twist_analysis(g, &phis, &[1, 0], cfg.cap)?;
            Ok((
                rep.pass,
                format!("R on G^2 = {}, R of cycle composite = {}", rep.r, rep.product_of_cycle_r),
            ))
        })());
    }
    rows.push_result("product twist SL:2:3 n=2 sigma=(1 2) random inner", (|| {
        let g = group("SL:2:3", cfg.cap)?;
        let mut rng = rng_for(cfg.seed, "product inner");
        let phis: Vec<Automorphism> = (0..2)
            .map(|_| Automorphism::Inner(g.element_matrix(rng.gen_range(0..g.order())).unwrap()))
            .collect();
        let rep = product_twist_analysis(g, &phis, &[1, 0], cfg.cap)?;
        Ok((rep.pass, format!("R on G^2 = {}, R of cycle composite = {}", rep.r, rep.product_of_cycle_r)))
    })());
    for (c, n) in [('A', 2), ('A', 3), ('A', 4), ('A', 5), ('D', 4), ('D', 5), ('E', 6)] {
        let Ok((rs, cb)) = basis(c, n, cfg) else {
            rows.push(format!("torus fixed {c}{n}"), false, "root system construction failed");
            continue;
        };
        for rho in rs.diagram_automorphisms().into_iter().filter(|r| !r.is_identity()) {
            rows.push_result(format!("torus fixed {c}{n} {}", rho.cycles()), (|| {
                let rep = case_witness(&rs, &rho, &cb, 5)?;
                let expect_case_two = c == 'A' && n % 2 == 0;
                let kind_ok = (rep.witness == WitnessKind::CaseII) == expect_case_two;
                Ok((
                    rep.d >= 1 && rep.verified && kind_ok,
                    format!(
                        "d={}, {:?} with alpha_{}, p={}, witness t={:?}",
                        rep.d, rep.witness, rep.alpha, rep.p, rep.nontrivial_t
                    ),
                ))
            })());
        }
    }
    rows.push_result("regular torus on U, A2 p=7", (|| {
        let rs = RootSystem::from_label('A', 2)?;
        let rep = unipo_analysis(&rs, 7, cfg.cap)?;
        Ok((
            rep.pass,
            format!(
                "t={:?}, |U|={}, |U^phi|={}, R={}, coincidence onto {}",
                rep.torus, rep.unipotent_order, rep.fixed_order, rep.r, rep.coincidence_surjective
            ),
        ))
    })());
    rows.push_result("regular torus search A1 p=3", (|| {
        let rs = RootSystem::from_label('A', 1)?;
        let too_small = matches!(crate::twisted::unipo_torus_search(&rs, 3), Err(Error::FieldTooSmall));
        Ok((too_small, "no t in GF(3)^x with t^2 != 1".to_string()))
    })());
    rows.push_result("partition invariants", partition_invariants(cfg));
}

/// Partition, class closure and `R = 1` iff the coincidence map is onto,
/// over a fixed family of groups and automorphisms.
pub fn partition_invariants(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let mut rng = rng_for(cfg.seed, "partition invariants");
    let cases: Vec<(&str, &str)> = vec![
        ("SL:2:3", "identity"),
        ("SL:2:3", "inner:1.2"),
        ("U:3:5", "unipotent-conj:d=1,2,4"),
        ("U:3:3", "unipotent-conj:d=1,2,1"),
        ("D:2:5", "diag-inverse"),
        ("D:2:7", "diag-cycle-twist:r=1"),
        ("B2:5", "identity"),
        ("PSL:2:5", "inner:1"),
        ("A:1:5:adjoint", "identity"),
        ("prod:D:1:7^2", "product:diag-inverse;identity:sigma=(1 2)"),
    ];
    let mut checked = 0usize;
    for (gs, ps) in cases {
        let bg = crate::dsl::parse_group(gs, cfg.cap, cfg.cache_dir.as_deref())?;
        let phi = AutTable::new(bg.group.clone(), crate::dsl::parse_phi(ps, &bg)?)?;
        let g = bg.group.as_ref();
        let part = reidemeister(&phi);
        if !part.is_partition() {
            return Ok((false, format!("{gs} {ps}: not a partition")));
        }
        for x in 0..g.order() {
            for _ in 0..50 {
                let h = rng.gen_range(0..g.order());
                let y = g.mul(g.mul(h, x), g.inv(phi.apply(h)));
                checked += 1;
                if !part.same_class(x, y) {
                    return Ok((false, format!("{gs} {ps}: class not closed at {}", g.describe(x))));
                }
            }
        }
        if (part.r() == 1) != coincidence_surjective(&phi) {
            return Ok((false, format!("{gs} {ps}: R=1 disagrees with coincidence map")));
        }
    }
    Ok((true, format!("{checked} closure samples")))
}

// ---- worked examples ----------------------------------------------------

/// `solve_unipotent` on random unitriangular `g`, checked by `y g = d y d^{-1}`.
pub fn solver_trials(n: usize, p: u32, d: &[i64], trials: usize, seed: u64) -> Result<(bool, String)> {
    let f = PrimeField::new(p)?;
    let dm = GroupElement::diagonal(f, d);
    let dinv = dm.inverse()?;
    let mut rng = rng_for(seed, &format!("solver {n} {p}"));
    let mut ok = 0;
    for _ in 0..trials {
        let mut rows = vec![vec![0i64; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1;
            for v in row.iter_mut().skip(i + 1) {
                *v = rng.gen_range(0..p as i64);
            }
        }
        let g = GroupElement::from_rows(f, &rows)?;
        let y = solve_unipotent(&dm, &g)?;
        if y.is_upper_unitriangular() && y.mul(&g) == y.conjugate_by(&dm, &dinv) {
            ok += 1;
        }
    }
    Ok((ok == trials, format!("{ok}/{trials} solutions verified")))
}

fn example_suite(rows: &mut Rows, cfg: &VerifyConfig) {
    for n in 1..=3 {
        for p in [5u32, 7] {
            rows.push_result(format!("diagonal inverse D_{n}(F_{p})"), (|| {
                let rep = diagonal_inverse_check(n, p, cfg.cap)?;
                Ok((
                    rep.pass,
                    format!(
                        "R=2^{n}, classes are componentwise square classes, [I] = squares ({}); \
                         finite-field shadow: over an algebraically closed field [I] is everything",
                        detail_of(rep.checked, &rep.counterexample)
                    ),
                ))
            })());
        }
    }
    for (n, p, r) in [(2, 5, 1), (2, 7, 1), (3, 7, 1), (2, 7, 2), (3, 5, 2)] {
        rows.push_result(format!("diagonal cycle twist D_{n}(F_{p}) r={r}"), (|| {
            let g = classical(ClassicalKind::Diagonal, n, p, cfg.cap)?;
            let t = AutTable::new(g, Automorphism::DiagonalCycleTwist { r })?;
            let part = reidemeister(&t);
            Ok((
                part.is_partition(),
                format!(
                    "R={} (the single-class statement {} over GF({p}))",
                    part.r(),
                    if part.r() == 1 { "holds" } else { "fails" }
                ),
            ))
        })());
    }
    for p in [5u32, 7] {
        rows.push_result(format!("G_a x G_m p={p}"), (|| {
            let rep = additive_multiplicative_shadow(p, cfg.cap)?;
            Ok((
                rep.multiplicative,
                format!("R={} = {:?} product; {}", rep.r, rep.factor_r, rep.note),
            ))
        })());
    }
    for (n, p) in [(2usize, 5u32), (2, 7), (3, 5), (3, 7)] {
        let d: Vec<i64> = [1, 2, 4][..n].to_vec();
        rows.push_result(format!("unipotent solver n={n} p={p} d={d:?}"), solver_trials(n, p, &d, 100, cfg.seed));
    }
    rows.push_result("unipotent conjugation U_3(F_5) d=(1,2,4)", (|| {
        let g = classical(ClassicalKind::Unitriangular, 3, 5, cfg.cap)?;
        let f = PrimeField::new(5)?;
        let t = AutTable::new(g, Automorphism::Conjugation(GroupElement::diagonal(f, &[1, 2, 4])))?;
        let r = reidemeister(&t).r();
        let onto = coincidence_surjective(&t);
        let fixed = fixed_subgroup(&t)?.len();
        Ok((
            r == 1 && onto && fixed == 1,
            format!("R={r}, coincidence onto {onto}, |fixed|={fixed} (finite-field shadow)"),
        ))
    })());
    rows.push_result("D_1 x U_3 p=5", (|| {
        let rep = diagonal_unipotent_shadow(1, &[1, 2, 4], 5, cfg.cap)?;
        Ok((rep.multiplicative, format!("R={} = {:?} product; {}", rep.r, rep.factor_r, rep.note)))
    })());
    rows.push_result("Borel B_2(F_p) p=3,5,7", (|| {
        let mut prev = 0;
        let mut increasing = true;
        let mut parts = Vec::new();
        let mut classes_ok = true;
        for p in [3u32, 5, 7] {
            let rep = borel2_analysis(p, cfg.cap)?;
            increasing &= rep.r_identity > prev;
            prev = rep.r_identity;
            classes_ok &= rep.r_identity == rep.conjugacy_classes;
            let homs: Vec<u32> =
                rep.displayed_maps.iter().filter(|d| d.is_homomorphism).map(|d| d.alpha).collect();
            parts.push(format!(
                "p={p}: |B|={}, R(id)={}, min R over torus-normalised={}, displayed map homomorphic for alpha in {homs:?}",
                rep.order, rep.r_identity, rep.min_r
            ));
        }
        Ok((increasing && classes_ok, parts.join("; ")))
    })());
    rows.push_result("R(identity) on SL_2(F_p) p=3,5,7,11", (|| {
        let mut prev = 0;
        let mut ok = true;
        let mut vals = Vec::new();
        for p in [3u32, 5, 7, 11] {
            let g = classical(ClassicalKind::SL, 2, p, cfg.cap)?;
            let r = reidemeister(&AutTable::identity(g.clone())).r();
            let brute = conjugacy_class_count(g.as_ref());
            ok &= r > prev && r == brute;
            prev = r;
            vals.push(format!("p={p}: R={r}, classes={brute}"));
        }
        Ok((ok, vals.join("; ")))
    })());
}
