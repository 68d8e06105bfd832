//! Named verification suites over small exact parameter boxes.
//!
//! Each suite evaluates a family of named checks — every one an exact
//! polynomial identity or an exact dimension comparison — and aggregates
//! them into a [`SuiteReport`].  Independent groups of checks run on the
//! rayon worker pool; the report is sorted by `(name, params)` at the
//! end, so its serialization does not depend on the worker count.
//!
//! The check names form a fixed catalogue (documented in the README):
//! each name states what mathematical fact the check verifies.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::decomp::basis::monomials_up_to;
use crate::decomp::gamma::{
    first_pseudo_hwv, gamma0_basis, gamma_basis, generation_check, is_harmonic, pseudo_hwv,
};
use crate::decomp::invariants::{graded_split, j_generators, tensor_split};
use crate::decomp::linalg::{SpanTracker, Vectorizer};
use crate::decomp::partitions::{
    all_parts_even, as_usize, dim_gamma, f_standard, invariant_dimension_sum, is_invariant_weight,
    is_pseudo_weight, partitions_of, pseudo_dimension_sum, tensor_invariant_dimension,
    tensor_pseudo_dimension,
};
use crate::decomp::tensor::{
    contraction_constant, pairing_span, slice_rank, slice_size, twisted_span,
};
use crate::diffops::{is_highest_weight, is_invariant, op_e, op_laplacian, Operator};
use crate::error::{Error, Result};
use crate::pfaffian::identities::{
    check_adjugate_euler, check_det_highest_weight, check_det_recursion, check_e_action_det,
    check_grad_det, check_laplace_det, check_laplace_power, check_laplace_truncation,
    check_nabla_d_lambda, check_r_nabla_constant, check_r_specialization, IdentityContext,
};
use crate::pfaffian::localization::{
    delta_f_detq_pow, membership, try_omega, xi_of_localized, zeta_powers,
};
use crate::pfaffian::osp22;
use crate::pfaffian::quadratics::d_poly;
use crate::report::{param_map, CheckResult, SuiteReport};
use crate::ring::localized::delta_det;
use crate::ring::poly::SuperPolynomial;
use crate::ring::signature::AlgebraSignature;
use crate::ring::subst::{group_action, osp0_generators, GroupElement};
use crate::scalar::Scalar;

/// Knobs shared by all suites; unset fields fall back to the suite's
/// documented defaults.
#[derive(Debug, Clone, Default)]
pub struct SuiteParams {
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub bign: Option<usize>,
    pub power: Option<usize>,
    pub degree: Option<usize>,
    pub max_k: Option<usize>,
    pub max_ell: Option<usize>,
}

/// The valid suite names, in catalogue order.
pub const SUITE_NAMES: &[&str] = &[
    "identities",
    "invariance",
    "pseudo",
    "regular-singular",
    "osp22",
    "decomposition",
    "tensor",
    "generation",
    "structure",
];

/// Run one named suite and return its finalized report.
pub fn run_suite(name: &str, p: &SuiteParams) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut report = match name {
        "identities" => suite_identities(p)?,
        "invariance" => suite_invariance(p)?,
        "pseudo" => suite_pseudo(p)?,
        "regular-singular" => suite_regular_singular(p)?,
        "osp22" => suite_osp22()?,
        "decomposition" => suite_decomposition(p)?,
        "tensor" => suite_tensor(p)?,
        "generation" => suite_generation(p)?,
        "structure" => suite_structure(p)?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    report.finalize();
    report.set_elapsed(start.elapsed().as_millis() as u64);
    Ok(report)
}

fn opt_params(p: &SuiteParams) -> BTreeMap<String, String> {
    let mut out = BTreeMap::new();
    let mut put = |k: &str, v: &Option<usize>| {
        if let Some(v) = v {
            out.insert(k.to_string(), v.to_string());
        }
    };
    put("m", &p.m);
    put("n", &p.n);
    put("bign", &p.bign);
    put("power", &p.power);
    put("degree", &p.degree);
    put("max_k", &p.max_k);
    put("max_ell", &p.max_ell);
    out
}

/// Run independent groups of checks on the worker pool and concatenate.
type Group = Box<dyn FnOnce() -> Result<Vec<CheckResult>> + Send>;

fn run_groups(groups: Vec<Group>) -> Result<Vec<CheckResult>> {
    let nested: Result<Vec<Vec<CheckResult>>> = groups.into_par_iter().map(|g| g()).collect();
    Ok(nested?.into_iter().flatten().collect())
}

fn format_weights(weights: &[Vec<usize>]) -> String {
    if weights.is_empty() {
        return "none".to_string();
    }
    weights
        .iter()
        .map(|w| {
            let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            format!("({})", parts.join(","))
        })
        .collect::<Vec<_>>()
        .join("+")
}

fn lambda_string(lambda: &[usize]) -> String {
    let parts: Vec<String> = lambda.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// The even part `π(f)`: the terms free of odd generators.
fn body(f: &SuperPolynomial) -> SuperPolynomial {
    SuperPolynomial::from_terms(
        f.signature(),
        f.terms()
            .filter(|(mono, _)| mono.odd_count() == 0)
            .map(|(mono, c)| (mono.clone(), c.clone())),
    )
}

fn single_pair(p: &SuiteParams, fallback: &[(usize, usize)]) -> Vec<(usize, usize)> {
    if p.m.is_some() || p.n.is_some() {
        vec![(p.m.unwrap_or(1), p.n.unwrap_or(1))]
    } else {
        fallback.to_vec()
    }
}

// ---------------------------------------------------------------------
// identities
// ---------------------------------------------------------------------

/// Small menu of even partitions (sum ≤ 6, length ≤ 3) used for the
/// product-collapse and evaluation checks.
fn even_partition_menu(bign: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for d in [2usize, 4, 6] {
        for lam in partitions_of(d, bign.min(3)) {
            if all_parts_even(&lam) {
                out.push(lam);
            }
        }
    }
    out
}

fn suite_identities(p: &SuiteParams) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("identities", opt_params(p));
    let pairs = single_pair(p, &[(1, 1), (2, 1), (1, 2), (2, 2)]);
    let p = p.clone();
    let groups: Vec<Group> = pairs
        .into_iter()
        .map(|(m, n)| {
            let p = p.clone();
            Box::new(move || identity_group(m, n, &p)) as Group
        })
        .collect();
    report.extend(run_groups(groups)?);
    Ok(report)
}

fn identity_group(m: usize, n: usize, p: &SuiteParams) -> Result<Vec<CheckResult>> {
    let bign = p.bign.unwrap_or(4);
    let sig = AlgebraSignature::try_new(m, n, bign)?;
    let kmax = p.max_k.unwrap_or(bign).min(bign);
    let ellmax = p.max_ell.unwrap_or(3);
    let ctx = IdentityContext::new(sig);
    let mut out = Vec::new();
    let pk = |k: usize| param_map([("m", m), ("n", n), ("k", k)]);
    let pkl = |k: usize, l: usize| param_map([("m", m), ("n", n), ("k", k), ("ell", l)]);

    for k in 1..=kmax {
        let mut ok = true;
        for a in 1..=sig.dim() {
            for j in 1..=k {
                ok &= check_grad_det(&ctx, k, a, j)?;
            }
        }
        out.push(CheckResult::verdict(
            "grad-det",
            pk(k),
            ok,
            format!("{} first-derivative formulas", sig.dim() * k),
        ));

        let mut ok = true;
        for j in 1..=k {
            ok &= check_laplace_det(&ctx, k, j)?;
        }
        out.push(CheckResult::verdict(
            "laplace-det",
            pk(k),
            ok,
            "diagonal second derivatives hit the adjugate",
        ));

        let mut ok = true;
        for i in 1..=bign {
            for j in 1..=k {
                ok &= check_e_action_det(&ctx, k, i, j)?;
            }
        }
        out.push(CheckResult::verdict(
            "e-action-det",
            pk(k),
            ok,
            format!("{} polarization formulas", bign * k),
        ));

        let mut ok = true;
        for j in 1..=k {
            ok &= check_adjugate_euler(&ctx, k, j)?;
        }
        out.push(CheckResult::verdict(
            "adjugate-euler",
            pk(k),
            ok,
            "mixing operators act on adjugate columns as expected",
        ));

        out.push(CheckResult::verdict(
            "det-highest-weight",
            pk(k),
            check_det_highest_weight(&ctx, k)?,
            "killed by raising operators, weight twice a fundamental one",
        ));

        out.push(CheckResult::verdict(
            "det-recursion",
            pk(k),
            check_det_recursion(&ctx, k - 1)?,
            "determinant expands along its last row of quadratics",
        ));

        for ell in 1..=ellmax {
            out.push(CheckResult::verdict(
                "laplace-power",
                pkl(k, ell),
                check_laplace_power(&ctx, k, ell)?,
                "Laplacian of a determinant power",
            ));
            out.push(CheckResult::verdict(
                "laplace-truncation",
                pkl(k, ell),
                check_laplace_truncation(&ctx, k, ell)?,
                "iterated Laplacian collapses the power exactly",
            ));
        }
    }

    for lambda in even_partition_menu(bign) {
        let pl = param_map([
            ("m", m.to_string()),
            ("n", n.to_string()),
            ("lambda", lambda_string(&lambda)),
        ]);
        out.push(CheckResult::verdict(
            "nabla-collapse",
            pl.clone(),
            check_nabla_d_lambda(&ctx, &lambda)?,
            "iterated Laplacians reduce the determinant product",
        ));
        out.push(CheckResult::verdict(
            "evaluation-constant",
            pl,
            check_r_nabla_constant(&ctx, &lambda)?,
            "restricted collapse evaluates to the closed constant",
        ));
    }

    for k in 1..=kmax {
        if bign > m {
            out.push(CheckResult::verdict(
                "restriction-values",
                pk(k),
                check_r_specialization(&ctx, k)?,
                "determinants restrict to odd-pairing Gram determinants",
            ));
        } else {
            out.push(CheckResult::skip(
                "restriction-values",
                pk(k),
                "restriction needs more copies than even dimensions",
            ));
        }
    }

    Ok(out)
}

// ---------------------------------------------------------------------
// invariance / pseudo
// ---------------------------------------------------------------------

fn suite_invariance(p: &SuiteParams) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("invariance", opt_params(p));
    let pairs = single_pair(p, &[(1, 0), (1, 1), (2, 1), (1, 2)]);
    let groups: Vec<Group> = pairs
        .into_iter()
        .map(|(m, n)| Box::new(move || invariance_group(m, n)) as Group)
        .collect();
    report.extend(run_groups(groups)?);
    Ok(report)
}

fn invariance_group(m: usize, n: usize) -> Result<Vec<CheckResult>> {
    let sig = AlgebraSignature::try_new(m, n, m)?;
    let om = try_omega(sig)?;
    let pm = param_map([("m", m), ("n", n)]);
    let mut out = Vec::new();

    out.push(CheckResult::verdict(
        "pfaffian-annihilated",
        pm.clone(),
        is_invariant(&om),
        "all isometry operators send the super Pfaffian to zero",
    ));

    let delta = delta_det(sig)?;
    out.push(CheckResult::verdict(
        "pfaffian-body",
        pm.clone(),
        body(&om) == delta.pow(2 * n + 1),
        "even part is the matrix determinant to an odd power",
    ));

    let square = &om * &om;
    out.push(CheckResult::verdict(
        "pfaffian-square",
        pm.clone(),
        square == d_poly(sig, m)?.pow(2 * n + 1),
        "square recovers the Gram determinant to the same odd power",
    ));

    let deg_ok =
        om.total_degree() == Some(m * (2 * n + 1)) && om.multidegree() == Some(vec![2 * n + 1; m]);
    out.push(CheckResult::verdict(
        "pfaffian-degree",
        pm,
        deg_ok,
        "degree in each copy is the odd integer 2n+1",
    ));

    Ok(out)
}

fn suite_pseudo(p: &SuiteParams) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("pseudo", opt_params(p));
    let pairs = single_pair(p, &[(1, 0), (1, 1), (2, 1), (1, 2)]);
    let groups: Vec<Group> = pairs
        .into_iter()
        .map(|(m, n)| Box::new(move || pseudo_group(m, n)) as Group)
        .collect();
    report.extend(run_groups(groups)?);
    Ok(report)
}

fn mat_is_identity(mat: &[Vec<Scalar>]) -> bool {
    mat.iter().enumerate().all(|(r, row)| {
        row.iter().enumerate().all(|(c, x)| {
            if r == c {
                x == &Scalar::one()
            } else {
                x.is_zero()
            }
        })
    })
}

fn pseudo_group(m: usize, n: usize) -> Result<Vec<CheckResult>> {
    let sig = AlgebraSignature::try_new(m, n, m)?;
    let om = try_omega(sig)?;
    let pm = param_map([("m", m), ("n", n)]);
    let mut out = Vec::new();

    let refl = GroupElement::reflection(m, n);
    let reflected = group_action(&refl, &om)?;
    out.push(CheckResult::verdict(
        "reflection-negates",
        pm.clone(),
        (&reflected + &om).is_zero(),
        "a determinant −1 isometry flips the sign",
    ));

    let gens = osp0_generators(m, n);
    let mut equivariant = true;
    let mut sympl_count = 0usize;
    let mut sympl_ok = true;
    for g in &gens {
        let image = group_action(g, &om)?;
        equivariant &= image == om.scale(&g.det0());
        if mat_is_identity(g.g0()) {
            sympl_count += 1;
            sympl_ok &= image == om;
        }
    }
    out.push(CheckResult::verdict(
        "group-equivariance",
        pm.clone(),
        equivariant,
        format!("g(Ω) = det(g)·Ω for {} even-group generators", gens.len()),
    ));
    if n == 0 {
        out.push(CheckResult::skip(
            "symplectic-fixes",
            pm,
            "no symplectic part when n = 0",
        ));
    } else {
        out.push(CheckResult::verdict(
            "symplectic-fixes",
            pm,
            sympl_count > 0 && sympl_ok,
            format!("{sympl_count} symplectic transvections fix the super Pfaffian"),
        ));
    }

    Ok(out)
}

// ---------------------------------------------------------------------
// regular-singular (localization thresholds)
// ---------------------------------------------------------------------

fn suite_regular_singular(p: &SuiteParams) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("regular-singular", opt_params(p));
    let pairs = single_pair(p, &[(1, 1), (1, 2), (2, 1), (2, 2)]);
    let groups: Vec<Group> = pairs
        .into_iter()
        .map(|(m, n)| Box::new(move || regular_singular_group(m, n)) as Group)
        .collect();
    report.extend(run_groups(groups)?);
    Ok(report)
}

fn regular_singular_group(m: usize, n: usize) -> Result<Vec<CheckResult>> {
    let sig = AlgebraSignature::try_new(m, n, m)?;
    let pm = param_map([("m", m), ("n", n)]);
    let mut out = Vec::new();

    for k in 0..=n + 1 {
        let pk = param_map([("m", m), ("n", n), ("k", k)]);
        let member = membership(sig, k)?;
        let expected = k >= n;
        out.push(CheckResult::verdict(
            "localization-threshold",
            pk.clone(),
            member == expected,
            if expected {
                "denominator clears at this power"
            } else {
                "denominator persists below the threshold"
            },
        ));

        let element = delta_f_detq_pow(sig, k)?;
        let rays = xi_of_localized(&element)?;
        let has_negative = rays.keys().next().map(|&d| d < 0).unwrap_or(false);
        out.push(CheckResult::verdict(
            "singular-ray",
            pk,
            has_negative == (k < n),
            if k < n {
                "the ray evaluation sees a genuine pole"
            } else {
                "the ray evaluation is polynomial"
            },
        ));
    }

    let (index, _) = zeta_powers(sig)?;
    out.push(CheckResult::verdict(
        "nilpotency-index",
        pm.clone(),
        index <= n * m,
        format!("largest nonzero power {index} within the bound {}", n * m),
    ));

    out.push(CheckResult::verdict(
        "denominator-clears",
        pm,
        try_omega(sig).is_ok(),
        "the square-root construction lands in the polynomial ring",
    ));

    Ok(out)
}

// ---------------------------------------------------------------------
// osp22 (the quartic operator construction at (m, n) = (2, 1))
// ---------------------------------------------------------------------

fn suite_osp22() -> Result<SuiteReport> {
    let mut report = SuiteReport::new("osp22", BTreeMap::new());
    let sig = osp22::signature22();
    let pm = param_map([("m", 2usize), ("n", 1usize)]);
    let mut out = Vec::new();

    out.push(CheckResult::verdict(
        "operator-dictionary",
        pm.clone(),
        osp22::dictionary_agrees(2),
        "complex-coordinate operators match the canonical isometry operators",
    ));

    let [j3, _j4, _j3bar, j4bar] = osp22::complex_ops_zform();
    let zero = Operator::zero(sig);
    let squares_vanish = j3.compose(&j3).equal_on_degree(&zero, 2)
        && j4bar.compose(&j4bar).equal_on_degree(&zero, 2);
    out.push(CheckResult::verdict(
        "creation-squares-vanish",
        pm.clone(),
        squares_vanish,
        "odd operators square to zero on low degrees",
    ));

    let quartic = osp22::quartic_image();
    let expected = osp22::expected_image();
    out.push(CheckResult::verdict(
        "quartic-closed-form",
        pm.clone(),
        quartic == expected,
        "four-fold operator image matches the closed formula term by term",
    ));

    let dz = osp22::delta_z();
    out.push(CheckResult::verdict(
        "quartic-body",
        pm.clone(),
        osp22::grassmann_component(&quartic, 0) == dz.pow(3),
        "Grassmann-degree-0 part is the cubed plane determinant",
    ));
    out.push(CheckResult::verdict(
        "quartic-top",
        pm.clone(),
        osp22::grassmann_component(&quartic, 4) == osp22::delta0().scale(&Scalar::int(-48)),
        "Grassmann-degree-4 part is −48 times the starting vector",
    ));
    out.push(CheckResult::verdict(
        "quartic-middle",
        pm.clone(),
        osp22::grassmann_component(&quartic, 2) == osp22::grassmann_component(&expected, 2),
        "Grassmann-degree-2 part matches the closed formula",
    ));
    let sum = &(&osp22::grassmann_component(&quartic, 0)
        + &osp22::grassmann_component(&quartic, 2))
        + &osp22::grassmann_component(&quartic, 4);
    out.push(CheckResult::verdict(
        "components-exhaust",
        pm.clone(),
        sum == quartic,
        "Grassmann degrees 0, 2, 4 account for the whole image",
    ));

    let ratio = osp22::omega_ratio();
    let expected_ratio = &Scalar::i() * &Scalar::int(8);
    out.push(CheckResult::verdict(
        "matches-pfaffian",
        pm.clone(),
        ratio.as_ref() == Some(&expected_ratio),
        "image is proportional to the super Pfaffian; ratio 8i from the frame",
    ));

    let refl = GroupElement::reflection(2, 1);
    let reflected = group_action(&refl, &quartic)?;
    out.push(CheckResult::verdict(
        "integral-image-pseudo",
        pm,
        is_invariant(&quartic) && (&reflected + &quartic).is_zero(),
        "image is an isometry-annihilated, reflection-negated vector",
    ));

    report.extend(out);
    Ok(report)
}

// ---------------------------------------------------------------------
// decomposition
// ---------------------------------------------------------------------

fn suite_decomposition(p: &SuiteParams) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("decomposition", opt_params(p));
    let m = p.m.unwrap_or(1);
    let n = p.n.unwrap_or(1);
    let bign = p.bign.unwrap_or(2);
    let dmax = p.degree.unwrap_or(6);
    let sig = AlgebraSignature::try_new(m, n, bign)?;

    let groups: Vec<Group> = (0..=dmax)
        .map(|d| Box::new(move || decomposition_group(sig, d)) as Group)
        .collect();
    report.extend(run_groups(groups)?);
    Ok(report)
}

fn decomposition_group(sig: AlgebraSignature, d: usize) -> Result<Vec<CheckResult>> {
    let (m, n, bign) = (sig.m(), sig.n(), sig.copies());
    let pd = param_map([("m", m), ("n", n), ("bign", bign), ("d", d)]);
    let mut out = Vec::new();

    let split = graded_split(sig, d)?;

    let inv_weights: Vec<Vec<usize>> = partitions_of(d, bign)
        .into_iter()
        .filter(|lam| is_invariant_weight(lam, m, n))
        .collect();
    let formula = as_usize(&invariant_dimension_sum(sig, d));
    out.push(CheckResult::verdict(
        "invariant-dimension",
        pd.clone(),
        split.invariant.len() == formula,
        format!(
            "brute {} = formula {} over weights {}",
            split.invariant.len(),
            formula,
            format_weights(&inv_weights)
        ),
    ));

    let pseudo_weights: Vec<Vec<usize>> = partitions_of(d, bign)
        .into_iter()
        .filter(|lam| is_pseudo_weight(lam, m, n))
        .collect();
    let formula = as_usize(&pseudo_dimension_sum(sig, d));
    out.push(CheckResult::verdict(
        "twisted-dimension",
        pd,
        split.pseudo.len() == formula,
        format!(
            "brute {} = formula {} over weights {}",
            split.pseudo.len(),
            formula,
            format_weights(&pseudo_weights)
        ),
    ));

    for lambda in inv_weights {
        let pl = param_map([
            ("m", m.to_string()),
            ("n", n.to_string()),
            ("bign", bign.to_string()),
            ("lambda", lambda_string(&lambda)),
        ]);
        let dl = crate::pfaffian::quadratics::d_lambda(sig, &lambda)?;
        let mut padded = lambda.clone();
        padded.resize(bign, 0);
        let ok = is_highest_weight(&dl) && dl.multidegree() == Some(padded) && is_invariant(&dl);
        out.push(CheckResult::verdict(
            "det-product-highest-weight",
            pl,
            ok,
            "determinant product is an invariant highest-weight vector of this weight",
        ));
    }

    for lambda in pseudo_weights {
        let pl = param_map([
            ("m", m.to_string()),
            ("n", n.to_string()),
            ("bign", bign.to_string()),
            ("lambda", lambda_string(&lambda)),
        ]);
        let mu: Vec<usize> = lambda
            .iter()
            .enumerate()
            .map(|(i, &x)| if i < m { x - 1 } else { x })
            .collect();
        let hwv = pseudo_hwv(sig, &mu)?;
        let ok = match hwv {
            None => false,
            Some(a) => {
                let mut padded = lambda.clone();
                padded.resize(bign, 0);
                let refl = GroupElement::reflection(m, n);
                let reflected = group_action(&refl, &a)?;
                is_highest_weight(&a)
                    && a.multidegree() == Some(padded)
                    && is_invariant(&a)
                    && (&reflected + &a).is_zero()
            }
        };
        out.push(CheckResult::verdict(
            "twisted-highest-weight",
            pl,
            ok,
            "twisted highest-weight vector exists with this weight and flips under reflection",
        ));
    }

    Ok(out)
}

// ---------------------------------------------------------------------
// tensor
// ---------------------------------------------------------------------

fn suite_tensor(p: &SuiteParams) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("tensor", opt_params(p));
    let m = p.m.unwrap_or(1);
    let n = p.n.unwrap_or(1);
    let bign = p.power.or(p.bign).unwrap_or(4);
    let sig = AlgebraSignature::try_new(m, n, bign)?;
    let size = slice_size(sig);
    if size > 100_000 {
        return Err(Error::SizeCap {
            what: "tensor slice",
            size,
            cap: 100_000,
        });
    }

    let groups: Vec<Group> = vec![
        Box::new(move || tensor_dimension_group(sig)) as Group,
        Box::new(move || tensor_span_group(sig)) as Group,
        Box::new(move || tensor_harmonic_group(sig)) as Group,
    ];
    report.extend(run_groups(groups)?);
    Ok(report)
}

fn tensor_dimension_group(sig: AlgebraSignature) -> Result<Vec<CheckResult>> {
    let (m, n, bign) = (sig.m(), sig.n(), sig.copies());
    let pm = param_map([("m", m), ("n", n), ("power", bign)]);
    let mut out = Vec::new();

    let split = tensor_split(sig)?;
    let inv_formula = as_usize(&tensor_invariant_dimension(sig));
    out.push(CheckResult::verdict(
        "tensor-invariant-dimension",
        pm.clone(),
        split.invariant.len() == inv_formula,
        format!(
            "brute {} = partition count {}",
            split.invariant.len(),
            inv_formula
        ),
    ));
    let pseudo_formula = as_usize(&tensor_pseudo_dimension(sig));
    out.push(CheckResult::verdict(
        "tensor-twisted-dimension",
        pm,
        split.pseudo.len() == pseudo_formula,
        format!(
            "brute {} = partition count {}",
            split.pseudo.len(),
            pseudo_formula
        ),
    ));
    Ok(out)
}

fn tensor_span_group(sig: AlgebraSignature) -> Result<Vec<CheckResult>> {
    let (m, n, bign) = (sig.m(), sig.n(), sig.copies());
    let pm = param_map([("m", m), ("n", n), ("power", bign)]);
    let mut out = Vec::new();

    if bign % 2 == 0 {
        let family = pairing_span(sig)?;
        let rank = slice_rank(sig, &family)?;
        let formula = as_usize(&tensor_invariant_dimension(sig));
        out.push(CheckResult::verdict(
            "pairing-span-spans",
            pm.clone(),
            rank == formula,
            format!(
                "{} permuted pairing products span rank {rank}",
                family.len()
            ),
        ));
        out.push(CheckResult::verdict(
            "pairing-vectors-invariant",
            pm.clone(),
            family.iter().all(is_invariant),
            "every permuted pairing product is isometry-annihilated",
        ));
    } else {
        out.push(CheckResult::skip(
            "pairing-span-spans",
            pm.clone(),
            "odd copy count has no invariants",
        ));
        out.push(CheckResult::skip(
            "pairing-vectors-invariant",
            pm.clone(),
            "odd copy count has no invariants",
        ));
    }

    let r = m * (2 * n + 1);
    if bign >= r && (bign - r) % 2 == 0 {
        let family = twisted_span(sig)?;
        let rank = slice_rank(sig, &family)?;
        let formula = as_usize(&tensor_pseudo_dimension(sig));
        out.push(CheckResult::verdict(
            "twisted-span-spans",
            pm,
            rank == formula,
            format!(
                "{} permuted harmonic-times-pairing products span rank {rank}",
                family.len()
            ),
        ));
    } else {
        out.push(CheckResult::skip(
            "twisted-span-spans",
            pm,
            "no twisted invariants at this copy count",
        ));
    }

    let pc = param_map([("m", m), ("n", n)]);
    if bign >= 2 {
        let c = contraction_constant(sig)?;
        out.push(CheckResult::verdict(
            "contraction-constant",
            pc,
            c == Scalar::int(m as i64 - 2 * n as i64),
            "contracting one pairing yields the superdimension",
        ));
    } else {
        out.push(CheckResult::skip(
            "contraction-constant",
            pc,
            "a pairing needs two copies",
        ));
    }

    Ok(out)
}

fn tensor_harmonic_group(sig: AlgebraSignature) -> Result<Vec<CheckResult>> {
    let (m, n, bign) = (sig.m(), sig.n(), sig.copies());
    let pm = param_map([("m", m), ("n", n), ("power", bign)]);
    let r = m * (2 * n + 1);
    if bign != r {
        return Ok(vec![CheckResult::skip(
            "harmonic-slice",
            pm,
            "slice is nonzero only when the copy count equals the Pfaffian degree",
        )]);
    }
    let g0 = gamma0_basis(sig)?;
    let rect = vec![2 * n + 1; m];
    let expected = as_usize(&f_standard(&rect));
    let ok = g0.len() == expected && g0.iter().all(|f| is_harmonic(sig, f));
    Ok(vec![CheckResult::verdict(
        "harmonic-slice",
        pm,
        ok,
        format!(
            "dimension {} matches the rectangle tableau count; all contractions vanish",
            g0.len()
        ),
    )])
}

// ---------------------------------------------------------------------
// generation
// ---------------------------------------------------------------------

fn suite_generation(p: &SuiteParams) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("generation", opt_params(p));
    let dmax = p.degree.unwrap_or(7);
    let sigs: Vec<AlgebraSignature> = if p.m.is_some() || p.n.is_some() || p.bign.is_some() {
        vec![AlgebraSignature::try_new(
            p.m.unwrap_or(1),
            p.n.unwrap_or(1),
            p.bign.unwrap_or(2),
        )?]
    } else {
        vec![
            AlgebraSignature::new(1, 1, 1),
            AlgebraSignature::new(1, 1, 2),
            AlgebraSignature::new(1, 1, 3),
        ]
    };

    let groups: Vec<Group> = sigs
        .into_iter()
        .map(|sig| Box::new(move || generation_group(sig, dmax)) as Group)
        .collect();
    report.extend(run_groups(groups)?);
    Ok(report)
}

fn generation_group(sig: AlgebraSignature, dmax: usize) -> Result<Vec<CheckResult>> {
    let (m, n, bign) = (sig.m(), sig.n(), sig.copies());
    let pm = param_map([("m", m), ("n", n), ("bign", bign)]);
    let mut out = Vec::new();

    let basis = gamma_basis(sig)?;
    let formula = as_usize(&dim_gamma(sig));
    out.push(CheckResult::verdict(
        "closure-dimension",
        pm.clone(),
        basis.len() == formula,
        format!(
            "lowering closure has rank {} = product formula",
            basis.len()
        ),
    ));

    // Degree sweeps are the expensive part; keep them to two copies.
    if bign <= 2 {
        for d in 0..=dmax {
            let pd = param_map([("m", m), ("n", n), ("bign", bign), ("d", d)]);
            out.push(CheckResult::verdict(
                "twisted-generated",
                pd,
                generation_check(sig, d)?,
                "twisted invariants = closure times plain invariants",
            ));
        }
    }

    if bign >= m + 1 {
        let a = first_pseudo_hwv(sig)?;
        let mut mu = vec![2 * n; m];
        mu.push(2);
        let b = pseudo_hwv(sig, &mu)?;
        out.push(CheckResult::verdict(
            "first-twisted-product",
            pm,
            b.as_ref() == Some(&a),
            "operator recipe equals the exact quotient for the next weight up",
        ));
    } else {
        out.push(CheckResult::skip(
            "first-twisted-product",
            pm,
            "needs at least m+1 copies",
        ));
    }

    Ok(out)
}

// ---------------------------------------------------------------------
// structure
// ---------------------------------------------------------------------

fn suite_structure(p: &SuiteParams) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("structure", opt_params(p));
    let m = p.m.unwrap_or(1);
    let n = p.n.unwrap_or(1);
    let bign = p.bign.unwrap_or(2);
    let sig = AlgebraSignature::try_new(m, n, bign)?;

    let groups: Vec<Group> = vec![
        Box::new(move || polarization_commutator_group(sig)) as Group,
        Box::new(move || bracket_closure_group(sig)) as Group,
        Box::new(move || laplacian_commutant_group(sig)) as Group,
    ];
    report.extend(run_groups(groups)?);
    Ok(report)
}

/// `a ∘ b − b ∘ a` as operators (`∘` = usual composition, left acts last).
fn commutator(a: &Operator, b: &Operator) -> Operator {
    a.compose(b).sub(&b.compose(a))
}

fn polarization_commutator_group(sig: AlgebraSignature) -> Result<Vec<CheckResult>> {
    let (m, n, bign) = (sig.m(), sig.n(), sig.copies());
    let pm = param_map([("m", m), ("n", n), ("bign", bign)]);
    let mut ok = true;
    for s in 1..=bign {
        for t in 1..=bign {
            for u in 1..=bign {
                for v in 1..=bign {
                    let lhs = commutator(&op_e(sig, s, t), &op_e(sig, u, v));
                    let mut rhs = Operator::zero(sig);
                    if t == u {
                        rhs = rhs.add(&op_e(sig, s, v));
                    }
                    if v == s {
                        rhs = rhs.sub(&op_e(sig, u, t));
                    }
                    ok &= lhs.equal_on_degree(&rhs, 3);
                }
            }
        }
    }
    Ok(vec![CheckResult::verdict(
        "polarization-commutators",
        pm,
        ok,
        "copy-mixing operators satisfy the general-linear relations",
    )])
}

fn bracket_closure_group(sig: AlgebraSignature) -> Result<Vec<CheckResult>> {
    let (m, n, bign) = (sig.m(), sig.n(), sig.copies());
    let pm = param_map([("m", m), ("n", n), ("bign", bign)]);
    let vz = Vectorizer::new(sig, monomials_up_to(sig, 3)?);
    let basis: Vec<SuperPolynomial> = monomials_up_to(sig, 3)?
        .into_iter()
        .map(|mono| SuperPolynomial::from_terms(sig, [(mono, Scalar::one())]))
        .collect();
    let flatten = |op: &Operator| -> Vec<Scalar> {
        let mut flat = Vec::with_capacity(vz.len() * basis.len());
        for b in &basis {
            flat.extend(vz.vectorize(&op.apply(b)));
        }
        flat
    };

    let gens = j_generators(sig);
    let mut span = SpanTracker::new(vz.len() * basis.len());
    for g in &gens {
        span.insert(flatten(g));
    }

    let mut ok = true;
    for a in &gens {
        for b in &gens {
            let (pa, pb) = (a.parity(), b.parity());
            let (Some(pa), Some(pb)) = (pa, pb) else {
                ok = false;
                continue;
            };
            let bracket = if pa == 1 && pb == 1 {
                // odd-odd: the super bracket is the anticommutator
                a.compose(b).add(&b.compose(a))
            } else {
                commutator(a, b)
            };
            ok &= span.contains(&flatten(&bracket));
        }
    }
    Ok(vec![CheckResult::verdict(
        "isometry-bracket-closure",
        pm,
        ok,
        "superbrackets of isometry operators stay in their span",
    )])
}

fn laplacian_commutant_group(sig: AlgebraSignature) -> Result<Vec<CheckResult>> {
    let (m, n, bign) = (sig.m(), sig.n(), sig.copies());
    let pm = param_map([("m", m), ("n", n), ("bign", bign)]);
    let zero = Operator::zero(sig);
    let gens = j_generators(sig);
    let mut ok = true;
    for s in 1..=bign {
        for t in 1..=bign {
            let lap = op_laplacian(sig, s, t);
            for g in &gens {
                ok &= commutator(&lap, g).equal_on_degree(&zero, 4);
            }
        }
    }
    Ok(vec![CheckResult::verdict(
        "laplacian-commutes",
        pm,
        ok,
        "copy-mixing Laplacians commute with every isometry operator",
    )])
}
