use skeinlab::arc_products::{product_closed_form, product_in_tbar_basis, verify_odd_odd_display};
use skeinlab::laurent::LaurentPoly;
use skeinlab::twist_models::annulus::{
    beta, annulus_mul_p, beta_mul_snsm_alpha, beta_mul_snsm_alpha_recurrence, beta_mul_tbar,
    beta_mul_tbar_recurrence, beta_mul_tn_p, beta_mul_tn_p_recurrence, AnnulusSymbol,
};
use skeinlab::twist_models::disk::{
    b_part_in_tbar, odd_symmetric_part, s_at_q_pair, z_mul_tbar_closed, z_mul_tbar_rewrite,
};
use skeinlab::twist_models::rule_forcing::force_c_rule;
use skeinlab::twist_models::transparency::{transparency_report, transparency_report_with_modulus};

#[test]
fn structure_constants_up_to_64() {
    let allowed = [0, 1, 2].map(LaurentPoly::constant);
    for m in 0..=64 {
        for n in 0..=64 {
            let oracle = product_in_tbar_basis(m, n).unwrap();
            assert_eq!(oracle, product_closed_form(m, n), "m={m} n={n}");
            assert!(oracle.values().all(|c| allowed.contains(c)));
        }
    }
}

#[test]
fn odd_odd_display_up_to_31() {
    for n in 0..=31 {
        for m in 0..=31 {
            assert!(verify_odd_odd_display(n, m), "n={n} m={m}");
        }
    }
}

#[test]
fn annulus_closed_forms_match_recurrences() {
    for n in 1..=32 {
        assert_eq!(beta_mul_tn_p(n).unwrap(), beta_mul_tn_p_recurrence(n).unwrap(), "n={n}");
        assert_eq!(
            beta_mul_snsm_alpha(n).unwrap(),
            beta_mul_snsm_alpha_recurrence(n).unwrap(),
            "n={n}"
        );
        assert_eq!(beta_mul_tbar(n).unwrap(), beta_mul_tbar_recurrence(n).unwrap(), "n={n}");
    }
}

#[test]
fn operator_chebyshev_identity() {
    // T_n(u + u⁻¹) = u^n + u^{-n} for u = qτ: everything but the extremes cancels
    for n in 1..=32usize {
        let r = beta_mul_tn_p_recurrence(n).unwrap();
        assert_eq!(r.len(), 2, "n={n}");
        let n = n as i64;
        assert_eq!(r.coeff(&AnnulusSymbol::Beta(n)), LaurentPoly::q_pow(n));
        assert_eq!(r.coeff(&AnnulusSymbol::Beta(-n)), LaurentPoly::q_pow(-n));
    }
    assert_eq!(annulus_mul_p(&beta()).len(), 2);
}

#[test]
fn disk_closed_form_matches_rewrite() {
    for n in 0..=32 {
        assert_eq!(z_mul_tbar_closed(n), z_mul_tbar_rewrite(n), "n={n}");
    }
}

#[test]
fn disk_symmetric_structure() {
    for n in 0..=32 {
        let e = z_mul_tbar_closed(n);
        if n % 2 == 0 {
            assert!(e.is_symmetric(), "n={n}");
        } else if n >= 3 {
            let sym = odd_symmetric_part(n).unwrap();
            assert!(sym.is_symmetric(), "n={n}");
            let c = b_part_in_tbar(&sym).unwrap();
            assert!(c.iter().all(LaurentPoly::is_nonneg), "n={n}");
        }
    }
}

#[test]
fn s_at_q_pair_is_positive() {
    for k in 0..=32usize {
        let s = s_at_q_pair(k);
        assert!(s.is_nonneg());
        assert_eq!(s.len(), k + 1);
        let expected: LaurentPoly = (0..=k as i64)
            .map(|i| LaurentPoly::q_pow(2 * k as i64 - 4 * i))
            .sum();
        assert_eq!(s, expected);
    }
}

#[test]
fn rule_is_forced() {
    assert!(force_c_rule().forces_standard_rule());
}

#[test]
fn transparency_parts() {
    for n in 1..=12 {
        let r = transparency_report(n).unwrap();
        assert!(r.z_commutes, "N={n}");
        assert!(transparency_report_with_modulus(n, 2 * n).unwrap().passed, "N={n}");
    }
    assert!(!transparency_report_with_modulus(3, 13).unwrap().z_commutes);
}
