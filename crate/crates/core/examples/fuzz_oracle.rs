use gmc_core::fixtures::axiom_suite_signatures;
use gmc_core::freecat::{equal_oracle, random};
use gmc_core::rng::Rng;

fn main() {
    let mut total = 0u64;
    let mut equal_count = 0u64;
    for (sig, palette) in axiom_suite_signatures() {
        let mut rng = Rng::new(0xdeadbeef);
        let mut done = 0;
        let mut draws = 0;
        while done < 5000 && draws < 500_000 {
            draws += 1;
            let a = rng.pick(&palette).clone();
            let dom = random::random_word(&sig, &mut rng, 4);
            let Ok(m1) = random::random_morphism_at(&sig, &mut rng, dom.clone(), a.clone(), 7) else { continue };
            let m2 = if rng.bool() {
                random::random_shuffle(&m1, &mut rng, 10)
            } else {
                match random::random_morphism_at(&sig, &mut rng, dom, a.clone(), 7) {
                    Ok(m) => m, Err(_) => continue,
                }
            };
            if m2.cod() != m1.cod() { continue; }
            let fast = m1.equal_at(&m2, &a).unwrap();
            match equal_oracle(&m1, &m2, &a, 2_000_000) {
                Ok(slow) => {
                    if fast != slow {
                        println!("MISMATCH over {} at {}:\nm1:\n{}m2:\n{}", sig.pcm(), a, m1.render_slices(), m2.render_slices());
                        std::process::exit(1);
                    }
                    if slow { equal_count += 1; }
                    total += 1;
                    done += 1;
                }
                Err(_) => continue,
            }
        }
        println!("{}: {done} pairs checked", sig.pcm());
    }
    println!("all agree: {total} pairs ({equal_count} equal)");
}
