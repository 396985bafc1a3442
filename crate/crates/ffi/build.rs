use std::env;
use std::fs;
use std::path::PathBuf;

fn main() {
    let crate_dir = PathBuf::from(env::var("CARGO_MANIFEST_DIR").unwrap());
    let config = cbindgen::Config::from_file(crate_dir.join("cbindgen.toml"))
        .expect("cbindgen.toml is readable");
    let bindings =
        cbindgen::generate_with_config(&crate_dir, config).expect("C header generation failed");
    let mut header = Vec::new();
    bindings.write(&mut header);
    let out = crate_dir.join("include").join("vpath.h");
    // Only touch the file when it changes, so rebuilds stay incremental.
    if fs::read(&out).ok().as_deref() != Some(header.as_slice()) {
        fs::create_dir_all(out.parent().unwrap()).unwrap();
        fs::write(&out, header).unwrap();
    }
    println!("cargo:rerun-if-changed=src");
    println!("cargo:rerun-if-changed=cbindgen.toml");
}
