use mgeo_core::convexity::strict_convexity_probe;
use mgeo_core::planar::find_conjugate_diameters;
use mgeo_core::spaces::builtin_space;

fn main() {
    let stadium = builtin_space("stadium").unwrap();
    let report = strict_convexity_probe(&stadium, 2_000, 1e-9, 0.05, 1);
    println!("stadium verdict {:?}", report.verdict);
    if let Some((u, v)) = &report.flat_witness {
        println!("witness u = {:?} (angle {})", u.coords(), u.angle());
        println!("witness v = {:?} (angle {})", v.coords(), v.angle());
    }
    for name in ["lp:1.5", "lp:3", "lp:4"] {
        let space = builtin_space(name).unwrap();
        match find_conjugate_diameters(&space, 360, 1e-6) {
            Ok(s) => {
                println!("{name}: {} pairs, all_conjugate={}", s.pairs.len(), s.all_conjugate);
                for p in s.pairs.iter().take(8) {
                    println!("  theta_x {:.6} theta_y {:.6} res ({:.2e},{:.2e}) {:?}", p.theta_x, p.theta_y, p.residual_xy, p.residual_yx, p.strength);
                }
            }
            Err(e) => println!("{name}: ERROR {e}"),
        }
    }
}
