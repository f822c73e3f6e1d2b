#[path = "support/cubic_oracle.rs"]
mod oracle;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use reflect_core::cubic;
use reflect_core::BinaryForm;

fn check(dd: i64) {
    let classes = cubic::enumerate_cubics(&BigInt::from(dd)).unwrap();
    let reps: Vec<[i64; 4]> = classes
        .iter()
        .map(|c| {
            let v: Vec<i64> = c.rep.coeffs().iter().map(|x| x.to_i64().unwrap()).collect();
            [v[0], v[1], v[2], v[3]]
        })
        .collect();
    let k0 = reps.iter().flatten().map(|x| x.abs()).max().unwrap_or(0).max((dd.abs() as f64).sqrt().ceil() as i64 + 2);
    let comps = oracle::oracle_classes(dd, k0);
    assert_eq!(comps.len(), reps.len(), "D={dd}: oracle {} vs enumeration {}", comps.len(), reps.len());
    for comp in &comps {
        let inside: Vec<_> = reps.iter().filter(|r| comp.contains(r)).collect();
        assert_eq!(inside.len(), 1, "D={dd}: component {:?}", comp[0]);
        for f in comp {
            let r = cubic::reduce_cubic(&BinaryForm::from_i64(f)).unwrap();
            assert_eq!(r.to_i64s().unwrap(), inside[0].to_vec(), "D={dd} form {f:?}");
        }
    }
}

#[test]
fn oracle_agrees_for_small_discriminants() {
    for m in 1..=60 {
        check(m);
        check(-m);
    }
}
