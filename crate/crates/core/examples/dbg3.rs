use mgeo_core::orthogonality::{directional_min, orthogonal_companion_2d};
use mgeo_core::spaces::{builtin_space, sphere_point_2d};
use mgeo_core::Tolerances;

fn main() {
    let l4 = builtin_space("lp:4").unwrap();
    for i in 0..24 {
        let theta = std::f64::consts::PI * i as f64 / 24.0;
        let x = sphere_point_2d(&l4, theta).unwrap();
        let y = orthogonal_companion_2d(&l4, &x).unwrap();
        let dm = directional_min(&l4, &y, &x, &Tolerances::default()).unwrap();
        println!("i={i:2} theta {theta:.4} rho {:+.6e}", dm.argmin);
    }
}
