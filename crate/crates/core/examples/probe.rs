use std::time::Instant;

use hypersum::arith::{CoeffElem, ParamPoly, YPoly};
use hypersum::context::Context;
use hypersum::shift::shift_y_poly;

fn main() {
    let ctx = Context::shift(&[]);
    let x = ctx.x();
    let int = |n: i64| CoeffElem::from_integer(n);
    let p = YPoly::from_coeffs(vec![x.clone(), int(0), int(1)]);
    let r = YPoly::from_coeffs(vec![&x + &int(1), int(0), int(1)]);
    let s1 = &p * &r;
    let s2 = &shift_y_poly(&p, 5, &ctx) * &shift_y_poly(&r, 3, &ctx);

    // s2(y + t) by Horner with t = var(1)
    let t = CoeffElem::from_poly(ParamPoly::var(1));
    let mut shifted = YPoly::zero();
    for c in s2.coeffs().iter().rev() {
        let up = &shifted.shift_up(1) + &shifted.scale(&t);
        shifted = &up + &YPoly::constant(c.clone());
    }
    println!("built shifted, deg {:?}", shifted.deg());

    let t0 = Instant::now();
    let res = YPoly::resultant_scaled(&s1, &shifted);
    println!("resultant in {:?}", t0.elapsed());
    let poly_t = res.num();
    println!(
        "deg_t = {:?}, deg_x = {:?}, terms = {}",
        poly_t.degree_in(1),
        poly_t.degree_in(0),
        poly_t.num_terms()
    );
}
