//! Parsing `m=8,kp=0,km=2`, `m=1,k=16` and the short aliases into profiles.

use fkm_core::clifford::ModuleProfile;

/// Short names for the twelve `S^31` foliations.
pub const ALIASES: [(&str, usize, usize, usize); 12] = [
    ("f114", 1, 16, 0),
    ("f213", 2, 8, 0),
    ("f312", 3, 4, 0),
    ("f411", 4, 0, 4),
    ("f411u", 4, 1, 3),
    ("f411uu", 4, 2, 2),
    ("f510", 5, 2, 0),
    ("f69", 6, 2, 0),
    ("f78", 7, 2, 0),
    ("f87", 8, 0, 2),
    ("f87u", 8, 1, 1),
    ("f96", 9, 1, 0),
];

pub fn alias_list() -> String {
    ALIASES.iter().map(|a| a.0).collect::<Vec<_>>().join(", ")
}

/// Selector text to profile; errors are usage errors.
pub fn parse_selector(text: &str) -> Result<ModuleProfile, String> {
    let text = text.trim();
    if let Some(&(_, m, kp, km)) = ALIASES.iter().find(|a| a.0.eq_ignore_ascii_case(text)) {
        return ModuleProfile::new(m, kp, km).map_err(|e| e.to_string());
    }
    if !text.contains('=') {
        return Err(format!(
            "unknown selector '{text}'; use m=M,k=K, m=M,kp=K,km=K or one of {}",
            alias_list()
        ));
    }
    let (mut m, mut k, mut kp, mut km) = (None, None, None, None);
    for part in text.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, found '{part}'"))?;
        let v: usize = value
            .trim()
            .parse()
            .map_err(|_| format!("'{value}' is not a nonnegative integer"))?;
        let slot = match key.trim() {
            "m" => &mut m,
            "k" => &mut k,
            "kp" => &mut kp,
            "km" => &mut km,
            other => return Err(format!("unknown key '{other}'")),
        };
        if slot.replace(v).is_some() {
            return Err(format!("key '{}' given twice", key.trim()));
        }
    }
    let m = m.ok_or("selector needs m=")?;
    let (kp, km) = match (k, kp, km) {
        (Some(k), None, None) => (k, 0),
        (None, Some(kp), km) => (kp, km.unwrap_or(0)),
        (None, None, Some(km)) => (0, km),
        (None, None, None) => return Err("selector needs k= or kp=/km=".into()),
        _ => return Err("use either k= or kp=/km=, not both".into()),
    };
    ModuleProfile::new(m, kp, km).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aliases_and_forms() {
        assert_eq!(parse_selector("f87").unwrap(), ModuleProfile::new(8, 0, 2).unwrap());
        assert_eq!(parse_selector("F87U").unwrap(), ModuleProfile::new(8, 1, 1).unwrap());
        assert_eq!(
            parse_selector("m=8,kp=0,km=2").unwrap(),
            ModuleProfile::new(8, 0, 2).unwrap()
        );
        assert_eq!(
            parse_selector("m=1, k=16").unwrap(),
            ModuleProfile::single(1, 16).unwrap()
        );
        assert_eq!(
            parse_selector("m=4,km=4").unwrap(),
            ModuleProfile::new(4, 0, 4).unwrap()
        );
    }

    #[test]
    fn rejects() {
        for bad in [
            "bogus",
            "m=8",
            "k=2",
            "m=8,k=2,kp=1",
            "m=x,k=1",
            "m=3,kp=1,km=1",
            "m=0,k=1",
            "m=1,k=1,k=2",
        ] {
            assert!(parse_selector(bad).is_err(), "{bad}");
        }
    }
}
