use qspforge_core::linalg::*;
use qspforge_core::dilation::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let u = random_unitary(&mut rng, 4);
    println!("norm {}", spectral_norm(&u));
    match polar_dilation(&u, 0.0) {
        Ok(_) => println!("ok"),
        Err(e) => println!("err: {e}"),
    }
}
