//! Structured text records for spaces, bundles, kernels and classes.
//!
//! Records are JSON objects tagged by `kind`. Spaces and bundles also accept
//! a compact shorthand: `P2`, `E`, `C3`, `pt`, `P1xE`; `O(3)`, `T`.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::characteristic::BundleData;
use crate::graded_ring::{BigradedAlgebra, HodgeClass};
use crate::spaces::{curve, line_bundle_ch, point, product_of, projective_space, SpaceModel};
use crate::transforms::{identity_kernel, line_bundle_kernel, random_kernel, rank_one_kernel, Kernel};
use crate::{Error, Result, Q};

/// A class as `{basis name → "p/q"}`, zero coefficients omitted.
pub type ClassRecord = BTreeMap<String, String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SpaceSpec {
    Point,
    Projective { n: u32 },
    Curve { genus: u32 },
    Product { factors: Vec<SpaceSpec> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum BundleSpec {
    Line { twist: i64 },
    Tangent,
    Sum { parts: Vec<BundleSpec> },
    Tensor { parts: Vec<BundleSpec> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum KernelSpec {
    Identity,
    RankOne { left: ClassRecord, right: ClassRecord },
    LineBundle { a: i64, b: i64 },
    Random { seed: u64 },
}

fn json<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Record(e.to_string()))
}

impl FromStr for SpaceSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return json(s);
        }
        let parts: Vec<&str> = s.split(['x', '×']).map(str::trim).collect();
        if parts.len() > 1 {
            let factors = parts.into_iter().map(SpaceSpec::from_str).collect::<Result<_>>()?;
            return Ok(SpaceSpec::Product { factors });
        }
        let bad = || Error::Record(format!("unrecognised space `{s}`"));
        match s {
            "pt" | "point" => Ok(SpaceSpec::Point),
            "E" => Ok(SpaceSpec::Curve { genus: 1 }),
            _ if s.starts_with('P') => Ok(SpaceSpec::Projective { n: s[1..].parse().map_err(|_| bad())? }),
            _ if s.starts_with('C') => Ok(SpaceSpec::Curve { genus: s[1..].parse().map_err(|_| bad())? }),
            _ => Err(bad()),
        }
    }
}

impl SpaceSpec {
    pub fn build(&self) -> Result<Arc<SpaceModel>> {
        match self {
            SpaceSpec::Point => Ok(point()),
            SpaceSpec::Projective { n } => projective_space(*n),
            SpaceSpec::Curve { genus } => curve(*genus),
            SpaceSpec::Product { factors } => {
                let built = factors.iter().map(SpaceSpec::build).collect::<Result<Vec<_>>>()?;
                product_of(&built)
            }
        }
    }
}

impl FromStr for BundleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return json(s);
        }
        if s == "T" {
            return Ok(BundleSpec::Tangent);
        }
        let inner = s
            .strip_prefix("O(")
            .or_else(|| s.strip_prefix("L("))
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Record(format!("unrecognised bundle `{s}`")))?;
        let twist = inner.trim().parse().map_err(|_| Error::Record(format!("bad twist in `{s}`")))?;
        Ok(BundleSpec::Line { twist })
    }
}

impl BundleSpec {
    pub fn build(&self, space: &SpaceModel) -> Result<BundleData> {
        let ring = space.ring();
        match self {
            BundleSpec::Line { twist } => BundleData::from_ch(1, line_bundle_ch(space, *twist)?),
            BundleSpec::Tangent => BundleData::from_ch(space.n() as i64, space.tangent_ch().clone()),
            BundleSpec::Sum { parts } => {
                parts.iter().try_fold(BundleData::trivial(0, ring), |acc, p| acc.direct_sum(&p.build(space)?, ring))
            }
            BundleSpec::Tensor { parts } => {
                parts.iter().try_fold(BundleData::trivial(1, ring), |acc, p| acc.tensor(&p.build(space)?, ring))
            }
        }
    }
}

impl FromStr for KernelSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "identity" | "id" => Ok(KernelSpec::Identity),
            _ => json(s),
        }
    }
}

impl KernelSpec {
    pub fn build(&self, source: &Arc<SpaceModel>, target: &Arc<SpaceModel>) -> Result<Kernel> {
        match self {
            KernelSpec::Identity => {
                if !source.same_as(target) {
                    return Err(Error::FactorMismatch("the identity kernel needs equal source and target".into()));
                }
                identity_kernel(source)
            }
            KernelSpec::RankOne { left, right } => {
                let alpha = class_from_record(source.ring(), left)?;
                let beta = class_from_record(target.ring(), right)?;
                rank_one_kernel(source, target, &alpha, &beta)
            }
            KernelSpec::LineBundle { a, b } => line_bundle_kernel(source, target, *a, *b),
            KernelSpec::Random { seed } => Ok(random_kernel(source, target, *seed)),
        }
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Q> {
    let bad = || Error::BadRational(s.to_string());
    let (num, den) = s.trim().split_once('/').unwrap_or((s.trim(), "1"));
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(num, den))
}

pub fn rational_string(x: &Q) -> String {
    x.to_string()
}

pub fn class_to_record(x: &HodgeClass) -> ClassRecord {
    x.terms().map(|(i, c)| (x.ring().monomial(i).name.clone(), rational_string(c))).collect()
}

pub fn class_from_record(ring: &Arc<BigradedAlgebra>, record: &ClassRecord) -> Result<HodgeClass> {
    let terms = record.iter().map(|(name, value)| Ok((name.as_str(), parse_rational(value)?))).collect::<Result<Vec<_>>>()?;
    HodgeClass::from_terms(ring, &terms)
}
