use dendrikit_core::catalog;
use dendrikit_core::dendrify::{dendrify, specialize_symmetric, DendrifyConfig};
use dendrikit_core::relspace::RelationSpan;

fn main() {
    let tri = dendrify(catalog::relations("a3").unwrap(), &DendrifyConfig::plain_tridend()).unwrap();
    println!("tridendrified a3 ({} relations):", tri.relations.len());
    for r in &tri.relations { println!("  {r}"); }
    let sp = specialize_symmetric(&tri, -1).unwrap();
    println!("specialized ({} relations):", sp.relations.len());
    for r in &sp.relations { println!("  {r}"); }
    let span = RelationSpan::new(&sp.relations, true).unwrap();
    for (i, r) in catalog::relations("post-lie").unwrap().relations.iter().enumerate() {
        println!("catalog post-lie[{i}] in specialized span: {} ({r})", span.contains(r).unwrap());
    }
    let cat = catalog::relations("post-lie").unwrap();
    let cspan = RelationSpan::new(&cat.relations, true).unwrap();
    for (i, r) in sp.relations.iter().enumerate() {
        println!("specialized[{i}] in catalog span: {}", cspan.contains(r).unwrap());
    }
}
