//! Text forms for groups and automorphisms.
//!
//! Groups: `A:2:3:adjoint`, `SL:2:3`, `GL:2:3`, `PSL:2:3`, `U:3:5`, `D:2:5`,
//! `B2:5`, `prod:<group>^n`.
//!
//! Automorphisms: `identity`, `inner:<word>` (generator indices, 1-based,
//! separated by `.`, negative for inverses, `e` for the empty word) or
//! `inner:[a,b;c,d]`, `diagram:<cycles>`, `diag-inverse`,
//! `diag-cycle-twist:r=<r>`, `unipotent-conj:d=<t1,..,tn>`,
//! `product:<phi;..;phi>:sigma=<cycles>`, `compose:<a>,<b>`.

use std::path::Path;
use std::sync::Arc;

use crate::automorphisms::Automorphism;
use crate::chevgroup::{classical, ChevalleyGroup, ClassicalKind};
use crate::error::{Error, Result};
use crate::group::{GroupRef, ProductGroup};
use crate::liealgebra::ChevalleyBasis;
use crate::matrix::GroupElement;
use crate::rootsystem::{DiagramAutomorphism, RootSystem};
use crate::scalars::PrimeField;

/// A parsed and enumerated group with the context automorphisms need.
pub struct BuiltGroup {
    pub spec: String,
    pub group: GroupRef,
    pub chevalley: Option<ChevalleyGroup>,
    /// The repeated factor of a `prod:` group.
    pub factor: Option<Box<BuiltGroup>>,
}

fn parse_num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim().parse().map_err(|_| Error::Parse(format!("bad {what}: {s:?}")))
}

pub fn parse_group(spec: &str, cap: usize, cache_dir: Option<&Path>) -> Result<BuiltGroup> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("prod:") {
        let (inner, n) = rest
            .rsplit_once('^')
            .ok_or_else(|| Error::Parse(format!("expected prod:<group>^n, got {spec:?}")))?;
        let n: usize = parse_num(n, "power")?;
        if n == 0 {
            return Err(Error::Parse("power must be positive".into()));
        }
        let factor = parse_group(inner, cap, cache_dir)?;
        let group: GroupRef = Arc::new(ProductGroup::power(factor.group.clone(), n, cap)?);
        return Ok(BuiltGroup { spec: spec.into(), group, chevalley: None, factor: Some(Box::new(factor)) });
    }
    let parts: Vec<&str> = spec.split(':').collect();
    let built = |group: GroupRef, chevalley| BuiltGroup { spec: spec.into(), group, chevalley, factor: None };
    match parts.as_slice() {
        [letter, rank, p, form] => {
            if *form != "adjoint" {
                return Err(Error::Parse(format!("unsupported form {form:?}; only adjoint")));
            }
            let mut chars = letter.chars();
            let c = match (chars.next(), chars.next()) {
                (Some(c), None) => c,
                _ => return Err(Error::Parse(format!("bad type {letter:?}"))),
            };
            let rs = RootSystem::from_label(c, parse_num(rank, "rank")?)?;
            let cb = ChevalleyBasis::load_or_compute(&rs, cache_dir)?;
            let cg = ChevalleyGroup::new(&cb, PrimeField::new(parse_num(p, "prime")?)?)?;
            let group: GroupRef = Arc::new(cg.enumerate(cap)?);
            Ok(built(group, Some(cg)))
        }
        ["B2", p] => Ok(built(classical(ClassicalKind::Borel2, 2, parse_num(p, "prime")?, cap)?, None)),
        [kind, n, p] => {
            let k = ClassicalKind::parse(kind)
                .filter(|k| *k != ClassicalKind::Borel2)
                .ok_or_else(|| Error::Parse(format!("unknown group kind {kind:?}")))?;
            Ok(built(classical(k, parse_num(n, "size")?, parse_num(p, "prime")?, cap)?, None))
        }
        _ => Err(Error::Parse(format!("unrecognised group spec {spec:?}"))),
    }
}

const KEYWORDS: [&str; 9] = [
    "identity",
    "id",
    "inner:",
    "diagram:",
    "diag-inverse",
    "diag-cycle-twist:",
    "unipotent-conj:",
    "product:",
    "compose:",
];

fn starts_with_keyword(s: &str) -> bool {
    KEYWORDS.iter().any(|k| s.starts_with(k))
}

fn parse_diag(field: PrimeField, text: &str) -> Result<GroupElement> {
    let vals: Vec<i64> = text.split(',').map(|v| parse_num(v, "diagonal entry")).collect::<Result<_>>()?;
    let d = GroupElement::diagonal(field, &vals);
    if d.determinant() == 0 {
        return Err(Error::NotInvertible);
    }
    Ok(d)
}

fn group_field(g: &BuiltGroup) -> Result<PrimeField> {
    g.group
        .element_matrix(g.group.identity())
        .map(|m| m.field())
        .ok_or_else(|| Error::Parse(format!("{} is not a matrix group", g.spec)))
}

fn parse_matrix(field: PrimeField, text: &str) -> Result<GroupElement> {
    let body = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("bad matrix {text:?}")))?;
    let rows: Vec<Vec<i64>> = body
        .split(';')
        .map(|r| r.split(',').map(|v| parse_num(v, "matrix entry")).collect())
        .collect::<Result<_>>()?;
    GroupElement::from_rows(field, &rows)
}

pub fn parse_phi(text: &str, g: &BuiltGroup) -> Result<Automorphism> {
    let text = text.trim();
    if text == "identity" || text == "id" {
        return Ok(Automorphism::Identity);
    }
    if text == "diag-inverse" {
        return Ok(Automorphism::DiagonalInverse);
    }
    if let Some(r) = text.strip_prefix("diag-cycle-twist:r=") {
        return Ok(Automorphism::DiagonalCycleTwist { r: parse_num(r, "r")? });
    }
    if let Some(d) = text.strip_prefix("unipotent-conj:d=") {
        return Ok(Automorphism::Conjugation(parse_diag(group_field(g)?, d)?));
    }
    if let Some(word) = text.strip_prefix("inner:") {
        let field = group_field(g)?;
        if word.starts_with('[') {
            return Ok(Automorphism::Inner(parse_matrix(field, word)?));
        }
        let grp = g.group.as_ref();
        let gens = grp.generators();
        let mut x = grp.identity();
        if word != "e" && !word.is_empty() {
            for tok in word.split('.') {
                let k: i64 = parse_num(tok, "generator index")?;
                let idx = k.unsigned_abs() as usize;
                if idx == 0 || idx > gens.len() {
                    return Err(Error::Parse(format!("generator index {k} out of range 1..={}", gens.len())));
                }
                let s = gens[idx - 1];
                x = grp.mul(x, if k < 0 { grp.inv(s) } else { s });
            }
        }
        return Ok(Automorphism::Inner(grp.element_matrix(x).unwrap()));
    }
    if let Some(cycles) = text.strip_prefix("diagram:") {
        let cg = g
            .chevalley
            .as_ref()
            .ok_or_else(|| Error::Parse("diagram automorphisms need a Chevalley group".into()))?;
        let rho = DiagramAutomorphism::from_cycles(cg.root_system().rank(), cycles)?;
        return Automorphism::diagram(cg, &rho);
    }
    if let Some(rest) = text.strip_prefix("product:") {
        let factor = g
            .factor
            .as_ref()
            .ok_or_else(|| Error::Parse("product automorphisms need a prod: group".into()))?;
        let (list, sigma) = rest
            .rsplit_once(":sigma=")
            .ok_or_else(|| Error::Parse("expected product:<phi;..>:sigma=<cycles>".into()))?;
        let factors: Vec<Automorphism> =
            list.split(';').map(|t| parse_phi(t, factor)).collect::<Result<_>>()?;
        let sigma = DiagramAutomorphism::from_cycles(factors.len(), sigma)?;
        return Ok(Automorphism::ProductTwist { factors, sigma: sigma.images().to_vec() });
    }
    if let Some(rest) = text.strip_prefix("compose:") {
        // a comma starts a new operand only when a keyword follows it
        let mut parts: Vec<String> = Vec::new();
        for tok in rest.split(',') {
            match parts.last_mut() {
                Some(last) if !starts_with_keyword(tok.trim_start()) => {
                    last.push(',');
                    last.push_str(tok);
                }
                _ => parts.push(tok.to_string()),
            }
        }
        let list: Vec<Automorphism> = parts.iter().map(|t| parse_phi(t, g)).collect::<Result<_>>()?;
        if list.len() < 2 {
            return Err(Error::Parse("compose needs at least two automorphisms".into()));
        }
        return Ok(Automorphism::Compose(list));
    }
    Err(Error::Parse(format!("unrecognised automorphism {text:?}")))
}
