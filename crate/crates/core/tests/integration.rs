use beurling::diagnostics::{amen_constant, arens_scan_canonical, classify_omega, Classification};
use beurling::fourier::{builtin_models, character_mult, transform};
use beurling::weights::{restrict_finite, restrict_su2_to_torus};
use beurling::{CharacterTable, DualTable, GroupFunction, IrrepLabel, MatrixModel, Truncation, Weight, WeightDescriptor};
use std::collections::BTreeMap;

const S3_JSON: &str = r#"{
  "order": 6,
  "classes": [{"size": 1, "name": "e"}, {"size": 3, "name": "(12)"}, {"size": 2, "name": "(123)"}],
  "irreps": [
    {"dim": 1, "name": "trivial", "char": [[1,0],[1,0],[1,0]]},
    {"dim": 1, "name": "sign", "char": [[1,0],[-1,0],[1,0]]},
    {"dim": 2, "name": "std", "char": [[2,0],[0,0],[-1,0]]}
  ],
  "conj": [0, 1, 2]
}"#;

#[test]
fn table_from_json_behaves_like_the_builtin() {
    let loaded = DualTable::from(CharacterTable::from_json(S3_JSON).unwrap());
    let builtin = DualTable::s3();
    for a in builtin.all_labels().unwrap() {
        for b in builtin.all_labels().unwrap() {
            assert_eq!(loaded.fuse(&a, &b).unwrap(), builtin.fuse(&a, &b).unwrap());
        }
    }
    let w = Weight::omega_a(loaded, 1.0).unwrap();
    assert_eq!(amen_constant(&w).unwrap(), 3.0);
}

#[test]
fn malformed_table_json_is_rejected() {
    let broken = S3_JSON.replace("[[2,0],[0,0],[-1,0]]", "[[2,0],[0,0],[1,0]]");
    assert!(CharacterTable::from_json(&broken).is_err());
    assert!(CharacterTable::from_json("{\"order\": 6").is_err());
}

#[test]
fn descriptors_round_trip_through_json() {
    let s3 = DualTable::s3();
    let cross_dual = DualTable::product(vec![s3.clone(), DualTable::Su2]).unwrap();
    let weights = vec![
        (DualTable::Su2, Weight::rho_b(DualTable::Su2, 0.5).unwrap()),
        (s3.clone(), Weight::exp_dim_b(s3.clone(), 0.3).unwrap().symmetrize()),
        (
            cross_dual.clone(),
            Weight::cross(
                cross_dual.clone(),
                vec![Weight::omega_a(s3.clone(), 1.0).unwrap(), Weight::sigma_a(DualTable::Su2, 2.0).unwrap()],
            )
            .unwrap(),
        ),
        (
            DualTable::Torus,
            Weight::poly_norm(DualTable::Torus, 1.0)
                .unwrap()
                .pointwise_product(&Weight::exp_norm(DualTable::Torus, 0.5).unwrap())
                .unwrap(),
        ),
    ];
    for (dual, w) in weights {
        let text = serde_json::to_string(&w.to_descriptor()).unwrap();
        let back = Weight::from_json(&dual, &text).unwrap();
        assert_eq!(back, w);
    }
    let bad = WeightDescriptor::family("rho_b").with_param("b", 2.0);
    assert!(Weight::from_descriptor(&DualTable::Su2, &bad).is_err());
}

#[test]
fn s3_restrictions_and_classification() {
    let g = CharacterTable::s3();
    let z2 = CharacterTable::cyclic(2).unwrap();
    let w = Weight::omega_a(DualTable::s3(), 2.0).unwrap();
    let r = restrict_finite(&w, &g, &z2, &[0, 1]).unwrap();
    assert_eq!(r.eval(&IrrepLabel::Finite(1)).unwrap(), 1.0);
    assert!(r.verify(&Truncation::all(r.dual()).unwrap()).unwrap().is_valid());

    let c = classify_omega(&Weight::omega_a(DualTable::Su2, 0.5).unwrap(), &Truncation::first(&DualTable::Su2, 30).unwrap());
    assert!(matches!(c.unwrap(), Classification::Divergent { exact: true, .. }));
}

#[test]
fn torus_restriction_of_a_table_is_bounded_by_the_search() {
    let values = (0..=40u32).map(|t| (IrrepLabel::Su2(t), if t == 7 { 1.5 } else { 2.0 + t as f64 }));
    let w = Weight::table(DualTable::Su2, values, None, 1.0).unwrap();
    let r = restrict_su2_to_torus(&w, Some(40)).unwrap();
    assert!(!r.is_exact());
    for n in 0..=7 {
        assert_eq!(r.weight.eval(&IrrepLabel::Torus(n)).unwrap(), 1.5);
    }
    assert_eq!(r.weight.eval(&IrrepLabel::Torus(8)).unwrap(), 10.0);
}

#[test]
fn character_ring_matches_pointwise_characters() {
    let m = MatrixModel::s3();
    let dual = m.dual().clone();
    let std = IrrepLabel::Finite(2);
    let a = BTreeMap::from([(std.clone(), 1.0)]);
    let prod = character_mult(&dual, &a, &a).unwrap();
    for g in 0..m.order() {
        let lhs = m.character(2, g) * m.character(2, g);
        let rhs: f64 = prod.iter().map(|(l, c)| c * m.character(dual.index_of(l).unwrap(), g).re).sum();
        assert!((lhs.re - rhs).abs() < 1e-12);
    }
}

#[test]
fn amenability_constant_is_at_least_one_on_every_model() {
    for model in builtin_models::<f64>() {
        let hat = transform(&model, &GroupFunction::delta_e(&model)).unwrap();
        for a in [0.0, 0.7, 1.5] {
            let w = Weight::omega_a(model.dual().clone(), a).unwrap();
            let c = amen_constant(&w).unwrap();
            assert!(c >= 1.0);
            assert!((hat.norm_a_delta(&w.symmetrize()).unwrap() - c).abs() < 1e-12);
        }
    }
}

#[test]
fn single_precision_pipeline() {
    let w = beurling::weights::Weight::<f32>::omega_a(DualTable::Su2, 1.0).unwrap();
    let r = arens_scan_canonical(&w, 30, 15, 0.05f32).unwrap();
    assert!((r.theta[3][4] - 8.0 / 20.0).abs() < 1e-6);
    let m = beurling::fourier::MatrixModel::<f32>::s3();
    let hat = transform(&m, &beurling::fourier::GroupFunction::delta_e(&m)).unwrap();
    let om = beurling::weights::Weight::<f32>::omega_a(m.dual().clone(), 1.0).unwrap();
    assert!((hat.norm_a_delta(&om.symmetrize()).unwrap() - 3.0).abs() < 1e-5);
}
