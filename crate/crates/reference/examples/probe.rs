use afm_core::PotentialSpec;
use afm_reference::basis_salpeter;

fn main() {
    let funnel = PotentialSpec::new(
        "funnel",
        (0.0, f64::INFINITY),
        |r: f64| r - 0.4 / r,
        |r: f64| 1.0 + 0.4 / (r * r),
    )
    .unwrap();
    for size in [32usize, 48, 64, 96] {
        match basis_salpeter(&funnel, 2.0, 0.0, 0, 0, size) {
            Ok(e) => println!("funnel size={size:>3} e={e:.8} vs 2.7821 err={:+.3e}", e - 2.7821),
            Err(err) => println!("funnel size={size:>3} ERR {err:?}"),
        }
    }
    let linear = PotentialSpec::power_law(1.0, 1.0);
    for size in [32usize, 48, 96] {
        match basis_salpeter(&linear, 2.0, 0.0, 0, 0, size) {
            Ok(e) => println!("linear size={size:>3} e={e:.8} vs 3.1577 err={:+.3e}", e - 3.1577),
            Err(err) => println!("linear size={size:>3} ERR {err:?}"),
        }
    }
}
