//! Build modules once and reload them from a cache directory
//! (`$SUPERCONE_CACHE_DIR` or a temporary directory).

use supercone::rational::q;
use supercone::rootdata::Weight;
use supercone::toolkit::{ModuleCache, ModuleKind};

fn main() -> supercone::error::Result<()> {
    let dir = std::env::temp_dir().join("supercone-example-cache");
    let cache = ModuleCache::from_env_or(None)?.map_or_else(|| ModuleCache::new(&dir), Ok)?;
    let lambda = Weight(vec![q(1), q(0), q(-1), q(-2)]);
    let built = cache.get_or_build(ModuleKind::Irreducible, 2, 2, &lambda)?;
    let loaded = cache.load(ModuleKind::Irreducible, 2, 2, &lambda)?.expect("just stored");
    assert_eq!(built, loaded);
    println!(
        "L dim ({}|{}) stored at {}",
        loaded.dim_even(),
        loaded.dim_odd(),
        cache.path_for(ModuleKind::Irreducible, 2, 2, &lambda).display()
    );
    Ok(())
}
