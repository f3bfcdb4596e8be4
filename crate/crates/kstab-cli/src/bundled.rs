//! Case files compiled into the binary.

/// `(path, contents)` relative to the `cases` directory.
pub const BUNDLED: &[(&str, &str)] = &[
    ("a1/SA_F0.json", include_str!("../cases/a1/SA_F0.json")),
    (
        "a1/Y0_F5_cubed.json",
        include_str!("../cases/a1/Y0_F5_cubed.json"),
    ),
    (
        "a1/Y0_tables.json",
        include_str!("../cases/a1/Y0_tables.json"),
    ),
    (
        "a1/Y1_tables.json",
        include_str!("../cases/a1/Y1_tables.json"),
    ),
    (
        "a1/flag_C_ordinary_fq.json",
        include_str!("../cases/a1/flag_C_ordinary_fq.json"),
    ),
    (
        "a1/flag_C_ordinary_general.json",
        include_str!("../cases/a1/flag_C_ordinary_general.json"),
    ),
    (
        "a1/flag_C_ordinary_surface.json",
        include_str!("../cases/a1/flag_C_ordinary_surface.json"),
    ),
    (
        "a1/flag_C_weighted_fq.json",
        include_str!("../cases/a1/flag_C_weighted_fq.json"),
    ),
    (
        "a1/flag_C_weighted_general.json",
        include_str!("../cases/a1/flag_C_weighted_general.json"),
    ),
    (
        "a1/flag_C_weighted_surface.json",
        include_str!("../cases/a1/flag_C_weighted_surface.json"),
    ),
    (
        "a1/flag_e_point.json",
        include_str!("../cases/a1/flag_e_point.json"),
    ),
    (
        "a1/flag_e_surface.json",
        include_str!("../cases/a1/flag_e_surface.json"),
    ),
    (
        "a1/ratio_F0.json",
        include_str!("../cases/a1/ratio_F0.json"),
    ),
    (
        "a1/vol_integral.json",
        include_str!("../cases/a1/vol_integral.json"),
    ),
    ("a2/SA_F0.json", include_str!("../cases/a2/SA_F0.json")),
    (
        "a2/Y0_F0_cubed.json",
        include_str!("../cases/a2/Y0_F0_cubed.json"),
    ),
    (
        "a2/Y0_tables.json",
        include_str!("../cases/a2/Y0_tables.json"),
    ),
    (
        "a2/Y1_C05_F0.json",
        include_str!("../cases/a2/Y1_C05_F0.json"),
    ),
    (
        "a2/Y1_F0sq_F5.json",
        include_str!("../cases/a2/Y1_F0sq_F5.json"),
    ),
    (
        "a2/Y1_tables.json",
        include_str!("../cases/a2/Y1_tables.json"),
    ),
    (
        "a2/Y2_F5_cubed.json",
        include_str!("../cases/a2/Y2_F5_cubed.json"),
    ),
    (
        "a2/Y2_tables.json",
        include_str!("../cases/a2/Y2_tables.json"),
    ),
    (
        "a2/flag_C1_C3_fq.json",
        include_str!("../cases/a2/flag_C1_C3_fq.json"),
    ),
    (
        "a2/flag_C1_C3_total.json",
        include_str!("../cases/a2/flag_C1_C3_total.json"),
    ),
    (
        "a2/flag_C1_surface.json",
        include_str!("../cases/a2/flag_C1_surface.json"),
    ),
    (
        "a2/flag_C3_surface.json",
        include_str!("../cases/a2/flag_C3_surface.json"),
    ),
    (
        "a2/flag_pencil_point.json",
        include_str!("../cases/a2/flag_pencil_point.json"),
    ),
    (
        "a2/flag_pencil_surface.json",
        include_str!("../cases/a2/flag_pencil_surface.json"),
    ),
    (
        "a2/ratio_F0.json",
        include_str!("../cases/a2/ratio_F0.json"),
    ),
    (
        "a2/vol_integral.json",
        include_str!("../cases/a2/vol_integral.json"),
    ),
    (
        "a2/vol_piece_3_5.json",
        include_str!("../cases/a2/vol_piece_3_5.json"),
    ),
    (
        "a2/vol_piece_5_6.json",
        include_str!("../cases/a2/vol_piece_5_6.json"),
    ),
    (
        "family39/SA_E.json",
        include_str!("../cases/family39/SA_E.json"),
    ),
    (
        "family39/beta_E.json",
        include_str!("../cases/family39/beta_E.json"),
    ),
    (
        "family39/delta_off_section.json",
        include_str!("../cases/family39/delta_off_section.json"),
    ),
    (
        "family39/delta_on_section.json",
        include_str!("../cases/family39/delta_on_section.json"),
    ),
    (
        "family39/flag_s.json",
        include_str!("../cases/family39/flag_s.json"),
    ),
    (
        "family39/gamma_certified.json",
        include_str!("../cases/family39/gamma_certified.json"),
    ),
    (
        "family39/k3.json",
        include_str!("../cases/family39/k3.json"),
    ),
    (
        "family39/k_general.json",
        include_str!("../cases/family39/k_general.json"),
    ),
    (
        "family39/lambda3.json",
        include_str!("../cases/family39/lambda3.json"),
    ),
    (
        "family39/res3.json",
        include_str!("../cases/family39/res3.json"),
    ),
    (
        "family39/s_sminus.json",
        include_str!("../cases/family39/s_sminus.json"),
    ),
    (
        "family42/barycenter.json",
        include_str!("../cases/family42/barycenter.json"),
    ),
    (
        "family42/beta_E.json",
        include_str!("../cases/family42/beta_E.json"),
    ),
    (
        "family42/euler_char.json",
        include_str!("../cases/family42/euler_char.json"),
    ),
    (
        "family42/toric_degree.json",
        include_str!("../cases/family42/toric_degree.json"),
    ),
    (
        "git/full_support.json",
        include_str!("../cases/git/full_support.json"),
    ),
    (
        "git/singular_point.json",
        include_str!("../cases/git/singular_point.json"),
    ),
    (
        "git/singular_support.json",
        include_str!("../cases/git/singular_support.json"),
    ),
    (
        "git/unstable_destabilizer.json",
        include_str!("../cases/git/unstable_destabilizer.json"),
    ),
    (
        "git/unstable_support.json",
        include_str!("../cases/git/unstable_support.json"),
    ),
    (
        "inv/dimensions.json",
        include_str!("../cases/inv/dimensions.json"),
    ),
    (
        "inv/invariance.json",
        include_str!("../cases/inv/invariance.json"),
    ),
    (
        "inv/peano_a11.json",
        include_str!("../cases/inv/peano_a11.json"),
    ),
    ("inv/rank.json", include_str!("../cases/inv/rank.json")),
    ("inv/series.json", include_str!("../cases/inv/series.json")),
    (
        "projective/applies_4_2.json",
        include_str!("../cases/projective/applies_4_2.json"),
    ),
    (
        "projective/check_4_3.json",
        include_str!("../cases/projective/check_4_3.json"),
    ),
    (
        "projective/check_5_3.json",
        include_str!("../cases/projective/check_5_3.json"),
    ),
    (
        "projective/check_6_4.json",
        include_str!("../cases/projective/check_6_4.json"),
    ),
    (
        "projective/euler_char_p3.json",
        include_str!("../cases/projective/euler_char_p3.json"),
    ),
    (
        "projective/gamma_4_3.json",
        include_str!("../cases/projective/gamma_4_3.json"),
    ),
];
