use num_complex::Complex64;
use zlocus::model::StructuredFunction;
use zlocus::plane::quadrant_of;
use zlocus::roots::roots_of_structured;
use zlocus::verdict::{classify_case, verify_distribution};

fn main() {
    let s = StructuredFunction::build(
        Complex64::new(60.0, 0.0),
        vec![2.0, 2.5, 3.0, 4.0],
        Complex64::new(5.0, 5.0),
        0,
        vec![1.0, 5.0],
    )
    .unwrap();
    let c = s.constant_c();
    println!("c = {:?}, case {:?}", c.value(), classify_case(c).unwrap());
    let zeros = roots_of_structured(&s).unwrap().trusted;
    for e in zeros.entries() {
        println!(
            "|z| = {:.6}  z = {:+.6}{:+.6}i  Q{:?}",
            e.location.norm(),
            e.location.re,
            e.location.im,
            quadrant_of(e.location).map(|q| q.index())
        );
    }
    let report = verify_distribution(&zeros, c, 0).unwrap();
    println!("overall: {}", report.overall);
    // locus over [0.1, 6]
    let points = zlocus::locus::locate_c_points(&s, 0.1, 6.0).unwrap();
    println!("c-points: {}", points.len());
    for p in &points {
        println!("  {:+.6}{:+.6}i (target Q{}, branch r {:.4})", p.location.re, p.location.im, p.target.index(), p.branch_r);
    }
}
