// The list of excluded characteristic-2 groups of Lie type.

use simplejac::psl2::{is_ftkl_exceptional, GroupDescriptor, GroupFamily};

pub fn main() {
    let cases = [
        GroupDescriptor::new(GroupFamily::Sp, 2, 2).derived(),
        GroupDescriptor::new(GroupFamily::Sp, 2, 4),
        GroupDescriptor::new(GroupFamily::Sp, 3, 2),
        GroupDescriptor::new(GroupFamily::OmegaPlus, 4, 2),
        GroupDescriptor::new(GroupFamily::OmegaMinus, 4, 2),
        GroupDescriptor::new(GroupFamily::L, 4, 2),
        GroupDescriptor::new(GroupFamily::L, 4, 8),
        GroupDescriptor::new(GroupFamily::G2, 0, 4),
        GroupDescriptor::new(GroupFamily::G2, 0, 16),
        GroupDescriptor::new(GroupFamily::Psl2, 2, 11),
    ];
    for g in cases {
        let tag = if is_ftkl_exceptional(&g).unwrap() { "exceptional" } else { "not exceptional" };
        println!("{:?} n={} q={}{}: {tag}", g.family, g.n, g.q, if g.derived { " (derived)" } else { "" });
    }
}
