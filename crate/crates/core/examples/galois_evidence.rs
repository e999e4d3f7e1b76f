// Frobenius degree patterns against the PSL2(F_11) census.

use simplejac::exact::rat;
use simplejac::families::build_f11;
use simplejac::galois::{chebotarev_expected, galois_evidence, EvidenceConfig};
use simplejac::poly::PolyQ;

pub fn main() {
    let f = build_f11(&rat(1, 1));
    let config = EvidenceConfig { seed: 7, ..EvidenceConfig::default() };
    let r = galois_evidence(&f, 11, &config).unwrap();
    let expected = chebotarev_expected(11).unwrap();
    println!("primes {}..{} ({} bad skipped)", r.first_prime, r.last_prime, r.bad_primes.len());
    for pc in &r.patterns {
        let share = pc.count as f64 / r.primes_sampled as f64;
        let want = expected.iter().find(|(t, _)| t.lengths() == pc.pattern.parts()).map(|(_, v)| v.to_string());
        println!("  {:<14} {:3}  {share:.3}  expected {}", pc.pattern.to_string(), pc.count, want.unwrap_or_default());
    }
    println!("TV distance {:.4}, verdict {:?}", r.tv_distance.unwrap(), r.verdict);

    // x^12 - 1 splits into small factors and leaves the census at once
    let g = PolyQ::from_i64s(&[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
    let r = galois_evidence(&g, 11, &EvidenceConfig { sample_size: 20, ..config }).unwrap();
    println!("x^12 - 1: {:?}", r.verdict);
}
