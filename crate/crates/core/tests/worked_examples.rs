//! Hand-drawn diagram products with known results.

mod common;

use twistkit_core::diagram::{DiagramFamily, Partition};

use common::{compose, p};

fn diagram(n: usize, arcs: &[(i32, i32)], lines: &[(i32, i32)]) -> Partition {
    let blocks: Vec<Vec<i32>> = arcs.iter().chain(lines).map(|&(x, y)| vec![x, y]).collect();
    Partition::new(n, &blocks).unwrap()
}

#[test]
fn degree_six_product_with_one_float() {
    let a = p("14|1'2'6'|234'5'|3'|56");
    let b = Partition::new(6, &[vec![1, 2], vec![3, 4, -1], vec![5, -4, -5, -6], vec![-2, -3], vec![6]]).unwrap();
    assert_eq!(a.rank(), 1);
    assert_eq!(a.dom(), vec![2, 3]);
    assert!(b.is_planar());
    assert!(!b.in_family(DiagramFamily::PB));
    let expect = Partition::new(6, &[vec![1, 4], vec![2, 3, -1, -4, -5, -6], vec![5, 6], vec![-2, -3]]).unwrap();
    let (ab, floats) = a.mul_floats(&b);
    assert_eq!(ab, expect);
    assert_eq!(floats, 1);
    assert_eq!(compose(&a, &b), (expect, 1));
}

#[test]
fn temperley_lieb_twelve_with_two_floats() {
    let a = diagram(
        12,
        &[(1, 2), (4, 5), (7, 8), (10, 11), (-2, -5), (-3, -4), (-7, -8), (-9, -10)],
        &[(3, -1), (6, -6), (9, -11), (12, -12)],
    );
    let b = diagram(
        12,
        &[(1, 2), (3, 4), (11, 12), (7, 10), (8, 9), (-1, -4), (-7, -12), (-2, -3), (-8, -9), (-10, -11)],
        &[(5, -5), (6, -6)],
    );
    let expect = diagram(
        12,
        &[(1, 2), (4, 5), (7, 8), (9, 12), (10, 11), (-1, -4), (-7, -12), (-2, -3), (-8, -9), (-10, -11)],
        &[(3, -5), (6, -6)],
    );
    for x in [&a, &b, &expect] {
        assert!(x.in_family(DiagramFamily::TL));
    }
    assert_eq!(a.mul_floats(&b), (expect.clone(), 2));
    assert_eq!(compose(&a, &b), (expect.clone(), 2));
    assert_eq!(expect.to_string().parse::<Partition>().unwrap(), expect);
}

#[test]
fn three_point_idempotents_multiply_to_a_non_idempotent_twist() {
    let e = p("12|1'2'|33'");
    let f = p("11'|23|2'3'");
    let (ef, floats) = e.mul_floats(&f);
    assert_eq!(ef, p("12|31'|2'3'"));
    assert_eq!(floats, 0);
    assert_eq!(e.mul_floats(&e).1, 1);
    assert_eq!(f.mul_floats(&f).1, 1);
    assert_eq!(ef.mul_floats(&ef), (ef.clone(), 0));
}
