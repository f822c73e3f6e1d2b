use reflect_core::boxes::{search_boxes, stabilizer, weight, BoxSearch, SymmetricPair};
use reflect_core::Error;

fn pair(a: [[i64; 3]; 3], b: [[i64; 3]; 3]) -> SymmetricPair {
    SymmetricPair { a, b }
}

fn listed_boxes() -> [SymmetricPair; 2] {
    [
        pair([[0, 0, -1], [0, -1, 0], [-1, 0, -1]], [[0, -1, 0], [-1, 0, -1], [0, -1, -1]]),
        pair([[0, -1, 0], [-1, 0, -1], [0, -1, -1]], [[-1, 0, -1], [0, -1, -1], [-1, -1, -1]]),
    ]
}

fn listed_even_box() -> SymmetricPair {
    pair([[0, 0, 1], [0, -2, 0], [1, 0, 2]], [[0, 1, 0], [1, 0, 0], [0, 0, -2]])
}

#[test]
fn resolvent_of_listed_boxes() {
    for p in listed_boxes() {
        assert_eq!(p.resolvent(), [1, 0, -1, -1]);
    }
    let e = listed_even_box();
    assert_eq!(e.resolvent(), [2, 0, -2, -2]);
    assert!(e.even_diagonal());
}

#[test]
fn resolvent_is_invariant() {
    let x = [[1, 2, 0], [0, 1, -1], [1, 1, 0]];
    for p in listed_boxes() {
        let q = p.transform(&x);
        assert_eq!(q.resolvent(), p.resolvent());
        assert_ne!(q, p);
    }
}

#[test]
fn cubic_field_of_discriminant_minus_23() {
    let classes = search_boxes(&[1, 0, -1, -1], BoxSearch::new(2, false)).unwrap();
    assert_eq!(classes.len(), 2);
    assert!(classes.iter().all(|c| c.stab == 2));
    assert_eq!(weight(&classes).value().to_string(), "1");
    let [p, q] = listed_boxes();
    let ip = classes.iter().position(|c| c.contains(&p)).unwrap();
    let iq = classes.iter().position(|c| c.contains(&q)).unwrap();
    assert_ne!(ip, iq);
}

#[test]
fn even_diagonal_boxes_for_twice_the_cubic() {
    let classes = search_boxes(&[2, 0, -2, -2], BoxSearch::new(2, true)).unwrap();
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0].stab, 2);
    assert!(classes[0].contains(&listed_even_box()));
    assert_eq!(weight(&classes).value().to_string(), "1/2");
    assert!(classes[0].members.iter().all(|m| m.even_diagonal()));
}

#[test]
fn guard_matters() {
    let mut p = BoxSearch::new(2, false);
    p.guard = 2;
    let tight = search_boxes(&[1, 0, -1, -1], p).unwrap();
    assert!(tight.len() >= 2);
    let total: usize = tight.iter().map(|c| c.members.len()).sum();
    let loose = search_boxes(&[1, 0, -1, -1], BoxSearch::new(2, false)).unwrap();
    assert_eq!(total, loose.iter().map(|c| c.members.len()).sum::<usize>());
}

#[test]
fn members_have_the_right_resolvent_and_bound() {
    for (f, even) in [([1, 0, -1, -1], false), ([2, 0, -2, -2], true), ([1, 0, -2, 1], false)] {
        for c in search_boxes(&f, BoxSearch::new(2, even)).unwrap() {
            for m in &c.members {
                assert_eq!(m.resolvent(), f);
                assert!(m.max_abs_entry() <= 2);
            }
        }
    }
}

#[test]
fn identity_and_negative_always_fix() {
    for p in listed_boxes() {
        assert!(stabilizer(&p, 1) >= 2);
        let neg = [[-1, 0, 0], [0, -1, 0], [0, 0, -1]];
        assert_eq!(p.transform(&neg), p);
    }
    // diag(1, -1, 1) type symmetries appear for diagonal pairs
    let d = pair([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[1, 0, 0], [0, 2, 0], [0, 0, 3]]);
    assert_eq!(d.resolvent(), [1, -6, 11, -6]);
    assert_eq!(stabilizer(&d, 2), 8);
}

#[test]
fn repeated_roots_are_rejected() {
    assert_eq!(search_boxes(&[1, 0, 0, 0], BoxSearch::new(1, false)), Err(Error::MultipleRoots));
    assert_eq!(search_boxes(&[1, -2, 1, 0], BoxSearch::new(1, false)), Err(Error::MultipleRoots));
}
