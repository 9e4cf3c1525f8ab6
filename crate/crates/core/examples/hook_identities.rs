//! Hook-length identities over André trees, pointed André trees and
//! binary plane trees.
//!
//!     cargo run --example hook_identities -- [N]

use ncchains::trees::{check_hook_a, check_hook_b, check_postnikov, enumerate_andre, hook_poly_a};

fn main() -> ncchains::Result<()> {
    let top: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for t in enumerate_andre(4, 9)? {
        println!("  {:<12} {}", t.to_string(), hook_poly_a(&t));
    }
    for n in 1..=top {
        let a = check_hook_a(n, 9)?;
        let b = check_hook_b(n.min(8), 9)?;
        let p = check_postnikov(n + 1, 9, 6)?;
        println!(
            "n={n}: A {} over {} trees; B {} over {}; plane n={} {}",
            verdict(a.equal()),
            a.trees,
            verdict(b.equal()),
            b.trees,
            p.n,
            verdict(p.pass())
        );
        println!("       {}", a.lhs);
    }
    Ok(())
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "FAILS"
    }
}
