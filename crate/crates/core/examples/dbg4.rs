use mgeo_core::orthogonality::{classify, orthogonal_companion_2d};
use mgeo_core::planar::find_conjugate_diameters;
use mgeo_core::spaces::{builtin_space, sphere_point_2d};
use mgeo_core::Tolerances;

fn main() {
    let l4 = builtin_space("lp:4").unwrap();
    let s = find_conjugate_diameters(&l4, 24, 1e-6).unwrap();
    println!("grid 24: {} pairs", s.pairs.len());
    for p in &s.pairs {
        println!("  ({:.6},{:.6}) res ({:.2e},{:.2e})", p.theta_x, p.theta_y, p.residual_xy, p.residual_yx);
    }
    // manual make_pair equivalent for the axis candidate
    let x = sphere_point_2d(&l4, 0.0).unwrap();
    let y = orthogonal_companion_2d(&l4, &x).unwrap();
    let phi = y.angle();
    let t = Tolerances::default();
    let x2 = sphere_point_2d(&l4, 0.0).unwrap();
    let y2 = sphere_point_2d(&l4, phi).unwrap();
    let cxy = classify(&l4, &x2, &y2, &t).unwrap();
    let cyx = classify(&l4, &y2, &x2, &t).unwrap();
    println!("manual: rel {:?}/{:?} res {:.3e}/{:.3e}", cxy.relation, cyx.relation, cxy.min_result.argmin.abs(), cyx.min_result.argmin.abs());
}
