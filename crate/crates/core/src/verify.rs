//! The verification driver: every comparison identity the engine supports,
//! evaluated exactly over the corpus and the kernel catalog, collected into a
//! deterministic JSON report.
//!
//! Checks run concurrently; the report is sorted by check name afterwards,
//! so its bytes depend only on the seed, the engine version and the suites.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[cfg(feature = "fault-injection")]
use crate::characteristic::degree_part;
use crate::characteristic::{star, vee};
use crate::graded_ring::HodgeClass;
use crate::hochschild::{mukai_pairing, shklyarov_pairing, HHClass, Pairing};
use crate::linalg::Matrix;
use crate::quiver::{geometric_cross_check_on, kronecker_algebra, negative_control};
use crate::spaces::{corpus, point, product, SpaceModel};
use crate::transforms::grr::{euler_characteristic, grr_projection_check};
use crate::transforms::{
    adjoint, compose, compose_by_pushforward, convolve_through_point, dual_basis_pairing_matrix, external_product, identity_kernel,
    identity_kernel_from_dual_bases, kernel_catalog, random_kernel, Kernel,
};
use crate::{q, qr, sign, Error, Result};

/// A named group of checks. The names are the values accepted by
/// `hkr verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Suite {
    #[serde(rename = "theorem1")]
    PairingDuality,
    #[serde(rename = "prop1")]
    Functoriality,
    #[serde(rename = "prop2")]
    Diagonal,
    #[serde(rename = "prop3")]
    Adjunction,
    #[serde(rename = "theorem2")]
    MukaiConvolution,
    #[serde(rename = "theorem3")]
    RiemannRoch,
    #[serde(rename = "quiver")]
    Quiver,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::PairingDuality,
        Suite::Functoriality,
        Suite::Diagonal,
        Suite::Adjunction,
        Suite::MukaiConvolution,
        Suite::RiemannRoch,
        Suite::Quiver,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PairingDuality => "theorem1",
            Suite::Functoriality => "prop1",
            Suite::Diagonal => "prop2",
            Suite::Adjunction => "prop3",
            Suite::MukaiConvolution => "theorem2",
            Suite::RiemannRoch => "theorem3",
            Suite::Quiver => "quiver",
        }
    }

    /// What the suite establishes, for reports and help text.
    pub fn description(self) -> &'static str {
        match self {
            Suite::PairingDuality => "Shklyarov pairing equals the Mukai pairing after dualising; both are non-degenerate",
            Suite::Functoriality => "convolution is functorial for composition of kernels",
            Suite::Diagonal => "the diagonal kernel acts as the identity and its components are dual bases",
            Suite::Adjunction => "the adjoint kernel is adjoint for the Mukai pairing; Serre and Todd identities",
            Suite::MukaiConvolution => "convolution agrees with Mukai-pairing convolution; compatibility with external products",
            Suite::RiemannRoch => "Grothendieck-Riemann-Roch for projections in degree 0",
            Suite::Quiver => "Kronecker Euler form equals the geometric Hom-dimension matrix on P1",
        }
    }

    /// Parses a suite name, or `all` for every suite.
    pub fn parse_selection(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        Ok(vec![s.parse()?])
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Record(format!("unknown suite `{s}`")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first failing instance of a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub suite: Suite,
    pub identity: String,
    pub instances: u64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub engine: String,
    pub version: String,
    pub seed: u64,
    pub suites: Vec<Suite>,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is serialisable");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Record(e.to_string()))
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn total_instances(&self, suite: Suite) -> u64 {
        self.checks.iter().filter(|c| c.suite == suite).map(|c| c.instances).sum()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub seed: u64,
    /// Adds wall-clock time per check; the report is then no longer
    /// byte-stable.
    pub timings: bool,
}

/// Runs the selected suites over the built-in corpus.
pub fn run(suites: &[Suite], options: Options) -> VerificationReport {
    run_on(&Corpus::standard(), suites, options)
}

/// Test hook: runs the suites on a corpus whose Todd classes have lost their
/// degree-one part. Every consistent engine must report failures.
#[cfg(feature = "fault-injection")]
pub fn run_with_corrupted_todd(suites: &[Suite], options: Options) -> VerificationReport {
    run_on(&Corpus::standard().with_corrupted_todd(), suites, options)
}

struct Corpus {
    spaces: Vec<Arc<SpaceModel>>,
}

impl Corpus {
    fn standard() -> Self {
        Corpus { spaces: corpus() }
    }

    #[cfg(feature = "fault-injection")]
    fn with_corrupted_todd(&self) -> Self {
        let spaces = self
            .spaces
            .iter()
            .map(|s| {
                let td = s.todd().sub(&degree_part(s.todd(), 1)).expect("same ring");
                s.with_todd(td)
            })
            .collect();
        Corpus { spaces }
    }

    fn get(&self, label: &str) -> Arc<SpaceModel> {
        self.spaces
            .iter()
            .find(|s| s.label().split('[').next() == Some(label))
            .cloned()
            .unwrap_or_else(|| panic!("{label} is not in the corpus"))
    }
}

fn slug(label: &str) -> String {
    label.split('[').next().unwrap_or(label).replace('×', "x")
}

#[derive(Default)]
struct Tally {
    instances: u64,
    witness: Option<Witness>,
}

impl Tally {
    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.instances += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn add(&mut self, count: u64, ok: bool, witness: impl FnOnce() -> Witness) {
        self.instances += count;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }
}

fn w(input: impl Into<String>, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Witness {
    Witness { input: input.into(), lhs: lhs.to_string(), rhs: rhs.to_string() }
}

type CheckFn = Box<dyn Fn(&Corpus, u64) -> Result<Tally> + Send + Sync>;

struct Check {
    name: String,
    suite: Suite,
    identity: &'static str,
    run: CheckFn,
}

fn check(suite: Suite, name: String, identity: &'static str, run: impl Fn(&Corpus, u64) -> Result<Tally> + Send + Sync + 'static) -> Check {
    Check { name, suite, identity, run: Box::new(run) }
}

const CORPUS_LABELS: [&str; 12] = ["pt", "P1", "P2", "P3", "P4", "C0", "E", "C2", "C3", "P1×P1", "E×E", "P1×E"];

/// Source/target pairs for the kernel-catalog checks besides `X → X`.
const MIXED_PAIRS: [(&str, &str); 4] = [("P1", "E"), ("E", "P1"), ("P2", "C2"), ("P1×P1", "E")];

fn kernel_pairs() -> Vec<(&'static str, &'static str)> {
    CORPUS_LABELS.iter().map(|l| (*l, *l)).chain(MIXED_PAIRS).collect()
}

fn all_checks() -> Vec<Check> {
    let mut out = Vec::new();

    for label in CORPUS_LABELS {
        out.push(check(
            Suite::PairingDuality,
            format!("theorem1.shk_vs_mukai.{}", slug(label)),
            "<a,b>_Shk = <vee(b),a>_M",
            move |c, _| {
                let x = c.get(label);
                let mut t = Tally::default();
                let basis = HHClass::basis_of(&x);
                for a in &basis {
                    for b in &basis {
                        let lhs = shklyarov_pairing(a, b)?;
                        let rhs = mukai_pairing(&HHClass::new(&x, vee(b.value()))?, a)?;
                        t.record(lhs == rhs, || w(format!("a = {a:?}, b = {b:?}"), &lhs, &rhs));
                    }
                }
                Ok(t)
            },
        ));
        out.push(check(
            Suite::PairingDuality,
            format!("theorem1.nondegenerate.{}", slug(label)),
            "det Gram(<,>_M) != 0 and det Gram(<,>_Shk) != 0",
            move |c, _| {
                let x = c.get(label);
                let mut t = Tally::default();
                for p in [Pairing::Mukai, Pairing::Shklyarov] {
                    let det = p.gram_matrix(&x).determinant();
                    t.record(det != q(0), || w(format!("{} Gram matrix on {}", p.name(), x.label()), &det, "nonzero"));
                }
                Ok(t)
            },
        ));
        out.push(check(
            Suite::Diagonal,
            format!("prop2.identity_kernel.{}", slug(label)),
            "convolve(Delta_*(td^-1), x) = x",
            move |c, _| {
                let x = c.get(label);
                let id = identity_kernel(&x)?;
                let mut t = Tally::default();
                for e in HHClass::basis_of(&x) {
                    let y = id.convolve(&e)?;
                    t.record(y == e, || w(format!("x = {e:?}"), y.value(), e.value()));
                }
                Ok(t)
            },
        ));
        out.push(check(
            Suite::Diagonal,
            format!("prop2.dual_bases.{}", slug(label)),
            "Delta_*(td^-1) = sum e_k (x) f_k with <f_k, e_l>_Shk = delta_kl",
            move |c, _| {
                let x = c.get(label);
                let grr = identity_kernel(&x)?;
                let dual = identity_kernel_from_dual_bases(&x)?;
                let mut t = Tally::default();
                t.record(grr == dual, || w(format!("identity kernel on {}", x.label()), grr.ch(), dual.ch()));
                let p = dual_basis_pairing_matrix(&grr)?;
                t.record(p.is_identity(), || w(format!("<f_k, e_l>_Shk on {}", x.label()), &p, "identity"));
                Ok(t)
            },
        ));
        out.push(check(
            Suite::Adjunction,
            format!("prop3.serre_todd_identities.{}", slug(label)),
            "ch(S_X) = (-1)^n ch(K_X) and td * ch(K_X) = star(td)",
            move |c, _| {
                let x = c.get(label);
                let mut t = Tally::default();
                let serre = x.canonical_ch().scale(&sign(x.n()));
                t.record(*x.serre_ch() == serre, || w("ch(S_X)", x.serre_ch(), &serre));
                let lhs = x.todd().mul(x.canonical_ch())?;
                let rhs = star(x.todd());
                t.record(lhs == rhs, || w("td * ch(K_X)", &lhs, &rhs));
                Ok(t)
            },
        ));
    }

    for (xl, yl) in kernel_pairs() {
        let pair = format!("{}-{}", slug(xl), slug(yl));
        out.push(check(
            Suite::Adjunction,
            format!("prop3.adjointness.{pair}"),
            "<convolve(K,x), y>_M = <x, convolve(K^!, y)>_M",
            move |c, seed| {
                let (x, y) = (c.get(xl), c.get(yl));
                let (gx, gy) = (Pairing::Mukai.gram_matrix(&x), Pairing::Mukai.gram_matrix(&y));
                let mut t = Tally::default();
                for k in kernel_catalog(&x, &y, seed)? {
                    let adj = adjoint(&k)?;
                    // entry (a, b) is the pairing of basis inputs a on X, b on Y
                    let lhs = k.transform_matrix().mul(&gy);
                    let rhs = gx.mul(&adj.transform_matrix().transpose());
                    let ok = lhs == rhs;
                    t.add((x.ring().dim() * y.ring().dim()) as u64, ok, || first_difference(&k, &lhs, &rhs));
                }
                Ok(t)
            },
        ));
        out.push(check(
            Suite::MukaiConvolution,
            format!("theorem2.mukai_convolution.{pair}"),
            "convolve(K, x) = sum <W(x), alpha>_M beta",
            move |c, seed| {
                let (x, y) = (c.get(xl), c.get(yl));
                let mut t = Tally::default();
                for k in kernel_catalog(&x, &y, seed)? {
                    let (lhs, rhs) = (k.transform_matrix(), k.mukai_transform_matrix());
                    let ok = lhs == rhs;
                    t.add(x.ring().dim() as u64, ok, || first_difference(&k, &lhs, &rhs));
                }
                Ok(t)
            },
        ));
    }

    for (xl, yl, zl) in [("P1", "P1", "P1"), ("P1", "E", "P1")] {
        let chain = format!("{}-{}-{}", slug(xl), slug(yl), slug(zl));
        out.push(check(
            Suite::Functoriality,
            format!("prop1.functoriality.{chain}"),
            "convolve(compose(K,L), x) = convolve(L, convolve(K, x))",
            move |c, seed| {
                let (x, y, z) = (c.get(xl), c.get(yl), c.get(zl));
                let mut t = Tally::default();
                let first = kernel_catalog(&x, &y, seed)?;
                let second = kernel_catalog(&y, &z, seed)?;
                let basis = HHClass::basis_of(&x);
                for k in &first {
                    let images: Vec<HHClass> = basis.iter().map(|e| k.convolve(e)).collect::<Result<_>>()?;
                    for l in &second {
                        let kl = compose(k, l)?;
                        for (e, img) in basis.iter().zip(&images) {
                            let lhs = kl.convolve(e)?;
                            let rhs = l.convolve(img)?;
                            t.record(lhs == rhs, || {
                                w(format!("K = {}, L = {}, x = {e:?}", k.label(), l.label()), lhs.value(), rhs.value())
                            });
                        }
                    }
                }
                Ok(t)
            },
        ));
        out.push(check(
            Suite::Functoriality,
            format!("prop1.composition_routes.{chain}"),
            "Kuenneth-component composition = pushforward composition",
            move |c, seed| {
                let (x, y, z) = (c.get(xl), c.get(yl), c.get(zl));
                let mut t = Tally::default();
                let first = kernel_catalog(&x, &y, seed)?;
                let second = kernel_catalog(&y, &z, seed)?;
                for k in &first {
                    for l in &second {
                        let (a, b) = (compose(k, l)?, compose_by_pushforward(k, l)?);
                        t.record(a == b, || w(format!("K = {}, L = {}", k.label(), l.label()), a.ch(), b.ch()));
                    }
                }
                Ok(t)
            },
        ));
        out.push(check(
            Suite::Functoriality,
            format!("prop1.associativity.{chain}"),
            "compose(compose(K,L),M) = compose(K,compose(L,M))",
            move |c, seed| {
                let (x, y, z) = (c.get(xl), c.get(yl), c.get(zl));
                let mut t = Tally::default();
                for k in 0..5 {
                    let a = random_kernel(&x, &y, seed.wrapping_add(3 * k));
                    let b = random_kernel(&y, &z, seed.wrapping_add(3 * k + 1));
                    let m = random_kernel(&z, &y, seed.wrapping_add(3 * k + 2));
                    let lhs = compose(&compose(&a, &b)?, &m)?;
                    let rhs = compose(&a, &compose(&b, &m)?)?;
                    t.record(lhs == rhs, || w(format!("K = {}, L = {}, M = {}", a.label(), b.label(), m.label()), lhs.ch(), rhs.ch()));
                }
                Ok(t)
            },
        ));
    }

    for (xl, yl, x2l, y2l) in [("P1", "E", "E", "P1"), ("P1", "P1", "E", "E"), ("E", "E", "P1", "P2")] {
        out.push(check(
            Suite::MukaiConvolution,
            format!("theorem2.external_product.{}-{}.{}-{}", slug(xl), slug(yl), slug(x2l), slug(y2l)),
            "convolve(K [x] K', a (x) b) = convolve(K, a) (x) convolve(K', b)",
            move |c, seed| {
                let (x, y, x2, y2) = (c.get(xl), c.get(yl), c.get(x2l), c.get(y2l));
                let mut t = Tally::default();
                let src = product(&x, &x2);
                let mut first = vec![random_kernel(&x, &y, seed), random_kernel(&x, &y, seed.wrapping_add(1))];
                first.extend(kernel_catalog(&x, &y, seed)?.into_iter().filter(|k| k.label().contains('⊗')).take(4));
                let second = vec![random_kernel(&x2, &y2, seed.wrapping_add(2)), random_kernel(&x2, &y2, seed.wrapping_add(3))];
                for k in &first {
                    for l in &second {
                        let kl = external_product(k, l)?;
                        for a in HHClass::basis_of(&x) {
                            for b in HHClass::basis_of(&x2) {
                                let input = HHClass::new(&src, HodgeClass::tensor(a.value(), b.value(), src.ring())?)?;
                                let lhs = kl.convolve(&input)?;
                                let rhs = HodgeClass::tensor(k.convolve(&a)?.value(), l.convolve(&b)?.value(), kl.target().ring())?;
                                t.record(*lhs.value() == rhs, || {
                                    w(format!("K = {}, K' = {}, a = {a:?}, b = {b:?}", k.label(), l.label()), lhs.value(), &rhs)
                                });
                            }
                        }
                    }
                }
                Ok(t)
            },
        ));
    }
    for (xl, x2l) in [("P1", "E"), ("E", "E"), ("P1", "P2")] {
        out.push(check(
            Suite::MukaiConvolution,
            format!("theorem2.identity_external_product.{}-{}", slug(xl), slug(x2l)),
            "id_X [x] id_X' = id_(X x X')",
            move |c, _| {
                let (x, x2) = (c.get(xl), c.get(x2l));
                let mut t = Tally::default();
                let lhs = external_product(&identity_kernel(&x)?, &identity_kernel(&x2)?)?;
                let rhs = identity_kernel(&product(&x, &x2))?;
                t.record(lhs == rhs, || w("identity kernels", lhs.ch(), rhs.ch()));
                Ok(t)
            },
        ));
    }
    for (xl, yl) in [("P1", "E"), ("E", "E"), ("E", "P1"), ("P1", "P2")] {
        out.push(check(
            Suite::MukaiConvolution,
            format!("theorem2.point_factorization.{}-{}", slug(xl), slug(yl)),
            "K = (Delta [x] id_Y) o (id_X [x] K_pt)",
            move |c, seed| {
                let (x, y) = (c.get(xl), c.get(yl));
                let mut t = Tally::default();
                for k in 0..3 {
                    let kern = random_kernel(&x, &y, seed.wrapping_add(k));
                    for a in HHClass::basis_of(&x) {
                        let lhs = convolve_through_point(&kern, &a)?;
                        let rhs = kern.convolve(&a)?;
                        t.record(lhs == rhs, || w(format!("K = {}, x = {a:?}", kern.label()), lhs.value(), rhs.value()));
                    }
                }
                Ok(t)
            },
        ));
    }

    for (xl, zl) in [("P1", "pt"), ("P2", "pt"), ("P1", "P1")] {
        out.push(check(
            Suite::RiemannRoch,
            format!("theorem3.grr.{}-{}", slug(xl), slug(zl)),
            "(f x id)_*(ch(L_a [x] L_b) td_X) = ch((f x id)_*(L_a [x] L_b))",
            move |c, _| {
                let (x, z) = (c.get(xl), if zl == "pt" { point() } else { c.get(zl) });
                let mut t = Tally::default();
                let twists: Vec<i64> = if zl == "pt" { vec![0] } else { (-3..=3).collect() };
                for a in -3..=3 {
                    for &b in &twists {
                        let r = grr_projection_check(&x, &z, a, b)?;
                        t.record(r.holds(), || w(format!("L_a [x] L_b with a = {a}, b = {b}"), &r.lhs, &r.rhs));
                    }
                }
                Ok(t)
            },
        ));
    }
    out.push(check(
        Suite::RiemannRoch,
        "theorem3.euler_characteristics".into(),
        "chi(P1, O(d)) = d+1 and chi(P2, O(d)) = (d+1)(d+2)/2",
        move |c, _| {
            let (p1, p2) = (c.get("P1"), c.get("P2"));
            let mut t = Tally::default();
            for d in -3..=3 {
                for (x, expected) in [(&p1, q(d + 1)), (&p2, qr((d + 1) * (d + 2), 2))] {
                    let oracle = euler_characteristic(x, d)?;
                    let hrr = crate::spaces::line_bundle_ch(x, d)?.mul(x.todd())?.integrate();
                    let ok = oracle == expected && hrr == expected;
                    t.record(ok, || w(format!("O({d}) on {}", x.label()), format!("{hrr} (integral), {oracle} (cohomology)"), &expected));
                }
            }
            Ok(t)
        },
    ));

    out.push(check(
        Suite::Quiver,
        "quiver.kronecker_cross_check".into(),
        "[#paths i->j] = [integral vee(ch O(i)) ch O(j) td] on P1",
        |c, _| {
            let r = geometric_cross_check_on(&c.get("P1"))?;
            let mut t = Tally::default();
            t.record(r.passes(), || w("Kronecker quiver vs P1", &r.algebra, &r.geometry));
            let hh0 = kronecker_algebra().hh0_classes().len();
            t.record(hh0 == 2, || w("dim HH_0 of the Kronecker algebra", hh0, 2));
            Ok(t)
        },
    ));
    out.push(check(Suite::Quiver, "quiver.negative_control".into(), "dropping the degree-one Todd term breaks the cross-check", |_, _| {
        let r = negative_control();
        let mut t = Tally::default();
        t.record(!r.passes(), || w("Kronecker quiver vs P1 with td = 1", &r.algebra, &r.geometry));
        Ok(t)
    }));

    out
}

fn first_difference(k: &Kernel, lhs: &Matrix, rhs: &Matrix) -> Witness {
    for i in 0..lhs.rows() {
        for j in 0..lhs.cols() {
            if lhs[(i, j)] != rhs[(i, j)] {
                let (x, y) = (k.source().ring(), k.target().ring());
                let col = if j < y.dim() { y.monomial(j).name.clone() } else { x.monomial(j).name.clone() };
                return w(format!("K = {}, entry ({}, {col})", k.label(), x.monomial(i).name), &lhs[(i, j)], &rhs[(i, j)]);
            }
        }
    }
    w(format!("K = {}", k.label()), lhs, rhs)
}

fn run_on(c: &Corpus, suites: &[Suite], options: Options) -> VerificationReport {
    let checks: Vec<Check> = all_checks().into_iter().filter(|k| suites.contains(&k.suite)).collect();
    let mut records: Vec<CheckRecord> = checks
        .par_iter()
        .map(|k| {
            let start = Instant::now();
            let (instances, witness) = match (k.run)(c, options.seed) {
                Ok(t) => (t.instances, t.witness),
                Err(e) => (0, Some(w("evaluation error", e, "a value"))),
            };
            CheckRecord {
                name: k.name.clone(),
                suite: k.suite,
                identity: k.identity.to_string(),
                instances,
                status: if witness.is_none() && instances > 0 { Status::Pass } else { Status::Fail },
                witness,
                elapsed_ms: options.timings.then(|| start.elapsed().as_millis() as u64),
            }
        })
        .collect();
    records.sort_by(|a, b| a.name.cmp(&b.name));
    let mut suites = suites.to_vec();
    suites.sort();
    suites.dedup();
    VerificationReport {
        engine: "hkr".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        seed: options.seed,
        suites,
        passed: records.iter().all(|r| r.status == Status::Pass),
        checks: records,
    }
}
