use mgeo_core::orthogonality::{classify, directional_min, orthogonal_companion_2d};
use mgeo_core::spaces::{builtin_space, sphere_point_2d, Vector};
use mgeo_core::Tolerances;

fn main() {
    let l4 = builtin_space("lp:4").unwrap();
    let x = sphere_point_2d(&l4, 0.0).unwrap();
    println!("x = {:?}", x.coords());
    let y = orthogonal_companion_2d(&l4, &x).unwrap();
    println!("companion y = {:?} angle {}", y.coords(), y.angle());
    let dm = directional_min(&l4, &y, &x, &Tolerances::default()).unwrap();
    println!("back dm: argmin {:.3e} min {:.17} flat {:?}", dm.argmin, dm.min_value, dm.flat_interval);
    let tol = Tolerances::default();
    let v = Vector::xy(0.0, 1.0).unwrap();
    let cxy = classify(&l4, &x, &v, &tol).unwrap();
    println!("classify(x,(0,1)): {:?} residual {:.3e} flat {:?}", cxy.relation, cxy.min_result.argmin.abs(), cxy.min_result.flat_interval);
    let cyx = classify(&l4, &v, &x, &tol).unwrap();
    println!("classify((0,1),x): {:?} residual {:.3e} flat {:?}", cyx.relation, cyx.min_result.argmin.abs(), cyx.min_result.flat_interval);
}
