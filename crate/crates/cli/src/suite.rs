//! The checks behind `verify-all`, also reused by the single-purpose
//! subcommands. Every failing check carries a `counterexample` with the
//! offending indices and both sides.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use skeinlab::arc_products::{product_closed_form, product_in_tbar_basis, verify_odd_odd_display};
use skeinlab::chebyshev::{
    cheb_s, cheb_t, cheb_tbar, change_of_basis, identity_sides, Family, IdentityTag,
    NormalizedSequence, PolyX,
};
use skeinlab::laurent::LaurentPoly;
use skeinlab::positivity_audit::{audit_r1_rn, d_closed_form, lower_bound_violation};
use skeinlab::twist_models::annulus::{
    beta_mul_snsm_alpha, beta_mul_snsm_alpha_recurrence, beta_mul_tbar, beta_mul_tbar_recurrence,
    beta_mul_tn_p, beta_mul_tn_p_recurrence, AnnulusSymbol,
};
use skeinlab::twist_models::disk::{
    b_part_in_tbar, odd_symmetric_part, small_case_table, z_mul_tbar_closed, z_mul_tbar_rewrite,
};
use skeinlab::twist_models::rule_forcing::force_c_rule;
use skeinlab::twist_models::transparency::transparency_report_with_modulus;
use skeinlab::CyclotomicContext;

/// Seed for the random audit vectors.
pub const AUDIT_SEED: u64 = 0x5eed_2024;
pub const AUDIT_SAMPLES: usize = 100;
/// Largest order exercised by the transparency check.
pub const TRANSPARENCY_ORDERS: u64 = 12;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Value,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: Value) -> Self {
        Self { name, passed, detail }
    }

    pub fn counterexample(&self) -> Option<&Value> {
        self.detail.get("counterexample")
    }
}

fn with_counterexample(mut detail: Value, cx: Option<Value>) -> Value {
    if let (Some(cx), Some(obj)) = (cx, detail.as_object_mut()) {
        obj.insert("counterexample".into(), cx);
    }
    detail
}

/// Every identity of the tabulated list for `0 ≤ n, m ≤ max`.
pub fn identities(max: usize) -> Check {
    let mut checked = 0usize;
    let mut cx = None;
    'outer: for tag in IdentityTag::ALL {
        for n in 0..=max {
            let ms = if tag.uses_m() { max } else { 0 };
            for m in 0..=ms {
                let (lhs, rhs) = identity_sides(tag, n as i64, m as i64).expect("nonnegative indices");
                checked += 1;
                if lhs != rhs {
                    cx = Some(json!({"identity": tag.name(), "n": n, "m": m, "lhs": lhs, "rhs": rhs}));
                    break 'outer;
                }
            }
        }
    }
    let passed = cx.is_none();
    Check::new(
        "identities",
        passed,
        with_counterexample(json!({"max": max, "instances": checked}), cx),
    )
}

/// `S_2 - S_1` and `S_3 - S_2` against their expanded forms.
pub fn s_difference_examples() -> Check {
    let s = |n| cheb_s(n).expect("n ≥ -1");
    let cases = [
        ("S_2 - S_1", &s(2) - &s(1), PolyX::from_ints(&[-1, -1, 1])),
        ("S_3 - S_2", &s(3) - &s(2), PolyX::from_ints(&[1, -2, -1, 1])),
    ];
    let mut cx = None;
    for (label, got, want) in &cases {
        if got != want {
            cx = Some(json!({"case": label, "lhs": got, "rhs": want}));
            break;
        }
    }
    let rendered: Vec<Value> = cases
        .iter()
        .map(|(label, got, _)| json!({"case": label, "value": got.to_string()}))
        .collect();
    Check::new(
        "s_difference_examples",
        cx.is_none(),
        with_counterexample(json!({"cases": rendered}), cx),
    )
}

fn seq(f: Family) -> NormalizedSequence {
    NormalizedSequence::family(f)
}

/// Why `a` fails to dominate `b`, if it does.
pub fn dominance_counterexample(a: Family, b: Family, max: usize) -> Option<Value> {
    let m = change_of_basis(&seq(a), &seq(b), max).expect("named families are normalized");
    m.first_negative().map(|(n, i)| {
        json!({
            "n": n,
            "i": i,
            "entry": m.entry(n, i),
            "lhs": a.term(n),
            "rhs": m.rows()[n],
        })
    })
}

/// `(S_n - S_{n-1}) ≤ (T̄_n) ≤ (S_n) ≤ (x^n)` up to `max`, and `T̄` does not
/// dominate `x^n` at degree 2.
pub fn dominance_chain(max: usize) -> Check {
    let chain = [Family::SDiff, Family::Tbar, Family::S, Family::Monomial];
    let mut cx = None;
    for w in chain.windows(2) {
        if let Some(c) = dominance_counterexample(w[1], w[0], max) {
            cx = Some(json!({"a": w[1].name(), "b": w[0].name(), "witness": c}));
            break;
        }
    }
    let control = dominance_counterexample(Family::Tbar, Family::Monomial, 2);
    if cx.is_none() && control.is_none() {
        cx = Some(json!({"a": "Tbar", "b": "X", "max": 2, "reason": "negative control dominates"}));
    }
    Check::new(
        "dominance_chain",
        cx.is_none(),
        with_counterexample(
            json!({"max": max, "negative_control": control}),
            cx,
        ),
    )
}

/// Change of basis in both directions composes to the identity.
pub fn basis_inverses(max: usize) -> Check {
    let mut cx = None;
    'outer: for a in Family::ALL {
        for b in Family::ALL {
            let ab = change_of_basis(&seq(a), &seq(b), max).expect("normalized");
            let ba = change_of_basis(&seq(b), &seq(a), max).expect("normalized");
            let prod = ab.compose(&ba);
            if !prod.is_identity() {
                cx = Some(json!({"a": a.name(), "b": b.name(), "lhs": prod, "rhs": "identity"}));
                break 'outer;
            }
        }
    }
    Check::new(
        "basis_inverses",
        cx.is_none(),
        with_counterexample(json!({"max": max}), cx),
    )
}

/// Polynomial oracle against the closed form for `m, n ≤ max`, with every
/// constant in `{0, 1, 2}`.
pub fn structure_constants(max: usize) -> Check {
    let allowed = [0, 1, 2].map(LaurentPoly::constant);
    let mut cx = None;
    'outer: for m in 0..=max {
        for n in 0..=max {
            let oracle = product_in_tbar_basis(m, n).expect("in range");
            let closed = product_closed_form(m, n);
            if oracle != closed || !oracle.values().all(|c| allowed.contains(c)) {
                cx = Some(json!({"m": m, "n": n, "lhs": oracle, "rhs": closed}));
                break 'outer;
            }
        }
    }
    Check::new(
        "structure_constants",
        cx.is_none(),
        with_counterexample(json!({"max": max}), cx),
    )
}

/// `T̄_{2n+1} T̄_{2m+1} = T_{2(n+m+1)} + T_{2|n-m|}` for `n, m ≤ limit`.
pub fn odd_odd_display(limit: usize) -> Check {
    let mut cx = None;
    'outer: for n in 0..=limit {
        for m in 0..=limit {
            if !verify_odd_odd_display(n, m) {
                let lhs = &cheb_tbar(2 * n + 1) * &cheb_tbar(2 * m + 1);
                let rhs = &cheb_t(2 * (n + m + 1)) + &cheb_t(2 * n.abs_diff(m));
                cx = Some(json!({"n": n, "m": m, "lhs": lhs, "rhs": rhs}));
                break 'outer;
            }
        }
    }
    Check::new(
        "odd_odd_display",
        cx.is_none(),
        with_counterexample(json!({"limit": limit}), cx),
    )
}

/// Closed forms of the three annulus products against the recurrence.
pub fn annulus_products(max: usize) -> Check {
    type Pair = (
        fn(usize) -> skeinlab::Result<skeinlab::twist_models::annulus::AnnulusElement>,
        fn(usize) -> skeinlab::Result<skeinlab::twist_models::annulus::AnnulusElement>,
    );
    let ops: [(&str, Pair); 3] = [
        ("Tn", (beta_mul_tn_p, beta_mul_tn_p_recurrence)),
        ("SnSm", (beta_mul_snsm_alpha, beta_mul_snsm_alpha_recurrence)),
        ("Tbar", (beta_mul_tbar, beta_mul_tbar_recurrence)),
    ];
    let mut cx = None;
    'outer: for n in 1..=max {
        for (name, (closed, rec)) in &ops {
            let c = closed(n).expect("n ≥ 1");
            let r = rec(n).expect("n ≥ 1");
            if c != r {
                cx = Some(json!({"op": name, "n": n, "lhs": c, "rhs": r}));
                break 'outer;
            }
        }
    }
    Check::new(
        "annulus_closed_forms",
        cx.is_none(),
        with_counterexample(json!({"max": max}), cx),
    )
}

/// `β·T_n(p)` keeps only `q^n β(n) + q^{-n} β(-n)`, for both parities of `n`.
pub fn annulus_operator_identity(max: usize) -> Check {
    let mut cx = None;
    for n in 1..=max {
        let r = beta_mul_tn_p_recurrence(n).expect("n ≥ 1");
        let k = n as i64;
        let expected = skeinlab::twist_models::SkeinElement::from_terms([
            (AnnulusSymbol::Beta(k), LaurentPoly::q_pow(k)),
            (AnnulusSymbol::Beta(-k), LaurentPoly::q_pow(-k)),
        ]);
        if r != expected {
            cx = Some(json!({"n": n, "lhs": r, "rhs": expected}));
            break;
        }
    }
    Check::new(
        "annulus_operator_identity",
        cx.is_none(),
        with_counterexample(json!({"max": max}), cx),
    )
}

/// Closed form of `z · T̄_n(α)` against the direct rewrite.
pub fn disk_closed_forms(max: usize) -> Check {
    let mut cx = None;
    for n in 0..=max {
        let closed = z_mul_tbar_closed(n);
        let rewrite = z_mul_tbar_rewrite(n);
        if closed != rewrite {
            cx = Some(json!({"n": n, "lhs": closed, "rhs": rewrite}));
            break;
        }
    }
    Check::new(
        "disk_closed_forms",
        cx.is_none(),
        with_counterexample(json!({"max": max}), cx),
    )
}

/// The tabulated outputs for `n = 1..=5`, compared term by term.
pub fn disk_small_cases() -> Check {
    let mut cx = None;
    for n in 1..=5 {
        let table = small_case_table(n).expect("n ≤ 5");
        let rewrite = z_mul_tbar_rewrite(n);
        if table != rewrite {
            cx = Some(json!({"n": n, "lhs": table, "rhs": rewrite}));
            break;
        }
    }
    Check::new(
        "disk_small_cases",
        cx.is_none(),
        with_counterexample(json!({"cases": [1, 2, 3, 4, 5]}), cx),
    )
}

/// Even products are mirror-bar symmetric; for odd `n` the part besides the
/// extreme terms is symmetric with nonnegative `T̄` coefficients.
pub fn disk_symmetry(max: usize) -> Check {
    let mut cx = None;
    for n in 0..=max {
        let e = z_mul_tbar_closed(n);
        if n % 2 == 0 {
            if !e.is_symmetric() {
                cx = Some(json!({"n": n, "lhs": e, "rhs": e.mirror_bar()}));
                break;
            }
        } else if n >= 3 {
            let sym = odd_symmetric_part(n).expect("odd n ≥ 3");
            let coeffs = b_part_in_tbar(&sym).expect("expansion exists");
            if !sym.is_symmetric() || !coeffs.iter().all(LaurentPoly::is_nonneg) {
                cx = Some(json!({"n": n, "lhs": sym, "rhs": sym.mirror_bar(), "tbar_coefficients": coeffs}));
                break;
            }
        }
    }
    Check::new(
        "disk_symmetry",
        cx.is_none(),
        with_counterexample(json!({"max": max}), cx),
    )
}

/// The C-rule solved from the `n = 1, 3, 5` outputs is `(q², q⁻², 1)` and unique.
pub fn rule_forcing() -> Check {
    let report = force_c_rule();
    let passed = report.forces_standard_rule();
    let cx = (!passed).then(|| {
        json!({"lhs": report.solution, "rhs": skeinlab::twist_models::disk::CRule::standard()})
    });
    Check::new(
        "rule_forcing",
        passed,
        with_counterexample(json!({"report": report}), cx),
    )
}

fn transparency_detail(order: u64, modulus: u64) -> (bool, Value, Option<Value>) {
    let r = transparency_report_with_modulus(order, modulus).expect("order ≥ 1, modulus ≥ 1");
    let detail = json!({
        "order": order,
        "modulus": modulus,
        "z_commutes": r.z_commutes,
        "beta_commutes": r.beta_commutes,
    });
    let cx = (!r.passed).then(|| transparency_counterexample(order, modulus));
    (r.passed, detail, cx)
}

/// Both products of each commutator, reduced modulo `v^modulus - 1`.
pub fn transparency_counterexample(order: u64, modulus: u64) -> Value {
    use skeinlab::twist_models::disk::tbar_mul_z;
    use skeinlab::twist_models::transparency::beta_prime_products;
    let ctx = CyclotomicContext::new(modulus).expect("modulus ≥ 1");
    let n = order as usize;
    let (left, right) = beta_prime_products(order).expect("order ≥ 1");
    json!({
        "order": order,
        "modulus": modulus,
        "z": {
            "lhs": z_mul_tbar_closed(n).reduce(&ctx),
            "rhs": tbar_mul_z(n).reduce(&ctx),
        },
        "beta_prime": {
            "lhs": left.reduce(&ctx),
            "rhs": right.reduce(&ctx),
        },
    })
}

/// `T̄_N(α)` commutes with `z` and `β'` modulo `v^{4N} - 1` for `1 ≤ N ≤ orders`.
pub fn transparency(orders: u64) -> Check {
    let mut rows = Vec::new();
    let mut cx = None;
    for n in 1..=orders {
        let (passed, detail, c) = transparency_detail(n, 4 * n);
        let half = transparency_report_with_modulus(n, 2 * n).expect("n ≥ 1").passed;
        let mut detail = detail;
        detail["passes_with_q_order_n"] = half.into();
        rows.push(detail);
        if !passed && cx.is_none() {
            cx = c;
        }
    }
    Check::new(
        "transparency",
        cx.is_none(),
        with_counterexample(json!({"orders": rows}), cx),
    )
}

/// At `N = 3` with modulus 13 the commutator must not vanish.
pub fn transparency_negative_control() -> Check {
    let (passed, detail, _) = transparency_detail(3, 13);
    let cx = passed.then(|| json!({"order": 3, "modulus": 13, "reason": "commutator vanished"}));
    Check::new(
        "transparency_negative_control",
        !passed,
        with_counterexample(detail, cx),
    )
}

/// `lower_bound_check` for `S`, `x^n`, `U` and `T̄` up to `max`.
pub fn lower_bounds(max: usize) -> Check {
    let mut cx = None;
    for fam in [Family::S, Family::Monomial, Family::U, Family::Tbar] {
        if let Some(v) = lower_bound_violation(&seq(fam), max).expect("normalized") {
            cx = Some(json!({"family": fam.name(), "violation": v}));
            break;
        }
    }
    Check::new(
        "lower_bounds",
        cx.is_none(),
        with_counterexample(json!({"max": max, "families": ["S", "X", "U", "Tbar"]}), cx),
    )
}

fn random_cone(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let terms = rng.gen_range(0..=3);
    LaurentPoly::from_terms((0..terms).map(|_| (rng.gen_range(-6i64..=6), rng.gen_range(0i64..=3))))
}

/// `(a, c)` pairs with coefficients in the cone: `c` is never zero, and
/// `a` is zero for roughly half of the samples.
pub fn random_audit_inputs(seed: u64, count: usize) -> Vec<(LaurentPoly, Vec<LaurentPoly>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = if rng.gen_bool(0.5) {
                LaurentPoly::zero()
            } else {
                &random_cone(&mut rng) + &LaurentPoly::v_pow(rng.gen_range(-4i64..=4))
            };
            let len = rng.gen_range(1..=12);
            let mut c: Vec<LaurentPoly> = (0..len).map(|_| random_cone(&mut rng)).collect();
            c[len - 1] += &LaurentPoly::one();
            (a, c)
        })
        .collect()
}

/// `d` matches its closed form, and vanishes exactly when `a = 0`.
pub fn random_audits(seed: u64, count: usize) -> Check {
    let mut zero_shift = 0usize;
    let mut cx = None;
    for (i, (a, c)) in random_audit_inputs(seed, count).into_iter().enumerate() {
        let r = audit_r1_rn(&a, &c);
        let closed = d_closed_form(&a, &c);
        zero_shift += usize::from(a.is_zero());
        if r.d != closed || r.d.is_zero() != a.is_zero() {
            cx = Some(json!({"sample": i, "a": a, "c": c, "lhs": r.d, "rhs": closed}));
            break;
        }
    }
    Check::new(
        "random_audits",
        cx.is_none(),
        with_counterexample(
            json!({"seed": seed, "samples": count, "zero_shift_samples": zero_shift}),
            cx,
        ),
    )
}

/// Every check at degree `max`, in a fixed order.
pub fn run_suite(max: usize) -> Vec<Check> {
    vec![
        identities(max),
        s_difference_examples(),
        dominance_chain(max),
        basis_inverses(max.min(16)),
        structure_constants(max),
        odd_odd_display(max.saturating_sub(1)),
        annulus_products(max),
        annulus_operator_identity(max),
        disk_closed_forms(max),
        disk_small_cases(),
        disk_symmetry(max),
        rule_forcing(),
        transparency((max as u64).clamp(1, TRANSPARENCY_ORDERS)),
        transparency_negative_control(),
        lower_bounds(max),
        random_audits(AUDIT_SEED, AUDIT_SAMPLES),
    ]
}
