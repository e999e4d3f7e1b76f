// End-to-end checks on the degree-12 and degree-14 families.

use simplejac::exact::rat;
use simplejac::families::{run_pipeline, PipelineConfig};
use simplejac::galois::EvidenceConfig;

pub fn main() {
    let config = PipelineConfig { evidence: EvidenceConfig { seed: 7, ..Default::default() }, ..Default::default() };
    for (q, s) in [(11, rat(1, 1)), (13, rat(-1, 1)), (11, rat(2, 3))] {
        let r = run_pipeline(q, &s, &config).unwrap();
        println!("q = {q}, s = {}: genus {}, outcome {}", r.s.as_deref().unwrap_or(""), r.genus, r.outcome);
        println!("  irreducibility {:?}", r.irreducibility);
        println!("  galois {:?}", r.galois.as_ref().map(|g| &g.verdict));
        if let Some(c) = &r.conclusion {
            println!("  {} [{}, {}]", c.statement, c.route, c.evidence_level);
        }
        for f in &r.failures {
            println!("  failure: {f}");
        }
    }
}
