//! C ABI over the `supermodular` crate.
//!
//! Games live behind opaque [`SmGame`] handles. Every function returns an
//! [`SmStatus`]; on failure a message is available from
//! [`sm_last_error_message`] on the same thread. Strings handed out by the
//! library must be released with [`sm_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use supermodular::faces::{descriptors, extreme_rays, face_dimension, theorem_report};
use supermodular::games::{is_supermodular, random_supermodular, RandomGameParams};
use supermodular::{json, Error, Game, GroundSet};

/// Result of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    GuardExceeded = 3,
    NotSupermodular = 4,
    Internal = 5,
    Panic = 6,
}

/// A game together with its ground-set labels.
pub struct SmGame {
    ground: GroundSet,
    game: Game,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SmStatus {
    match e {
        Error::Guard { .. } => SmStatus::GuardExceeded,
        Error::NotSupermodular => SmStatus::NotSupermodular,
        Error::Inconsistent(_) | Error::Overflow(_) => SmStatus::Internal,
        _ => SmStatus::InvalidInput,
    }
}

fn guarded(f: impl FnOnce() -> Result<(), SmStatus>) -> SmStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SmStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside the library");
            SmStatus::Panic
        }
    }
}

fn lib<T>(r: supermodular::Result<T>) -> Result<T, SmStatus> {
    r.map_err(|e| {
        set_error(&e.to_string());
        status_of(&e)
    })
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), SmStatus> {
    if p.is_null() {
        set_error(&format!("{what} is null"));
        return Err(SmStatus::NullPointer);
    }
    Ok(())
}

unsafe fn game_ref<'a>(g: *const SmGame) -> Result<&'a SmGame, SmStatus> {
    non_null(g, "game handle")?;
    Ok(&*g)
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), SmStatus> {
    let c = CString::new(s).map_err(|_| {
        set_error("output contains a NUL byte");
        SmStatus::Internal
    })?;
    *out = c.into_raw();
    Ok(())
}

/// Parses a game from its JSON encoding.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_game_from_json(text: *const c_char, out: *mut *mut SmGame) -> SmStatus {
    guarded(|| {
        non_null(text, "text")?;
        non_null(out, "out")?;
        let s = CStr::from_ptr(text).to_str().map_err(|_| {
            set_error("text is not UTF-8");
            SmStatus::InvalidInput
        })?;
        let (ground, game) = lib(json::parse_game(s))?;
        *out = Box::into_raw(Box::new(SmGame { ground, game }));
        Ok(())
    })
}

/// Draws a seeded random supermodular game on `n` letters.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_game_random(
    n: u32,
    seed: u64,
    terms: u32,
    max_coeff: u32,
    out: *mut *mut SmGame,
) -> SmStatus {
    guarded(|| {
        non_null(out, "out")?;
        let n = n as usize;
        let game = lib(random_supermodular(
            seed,
            RandomGameParams::new(n, terms as usize, max_coeff),
        ))?;
        let ground = lib(GroundSet::letters(n))?;
        *out = Box::into_raw(Box::new(SmGame { ground, game }));
        Ok(())
    })
}

/// Releases a game handle; null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sm_game_free(g: *mut SmGame) {
    if !g.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(Box::from_raw(g))));
    }
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_game_ground_size(g: *const SmGame, out: *mut u32) -> SmStatus {
    guarded(|| {
        non_null(out, "out")?;
        *out = game_ref(g)?.ground.len() as u32;
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_game_is_supermodular(g: *const SmGame, out: *mut bool) -> SmStatus {
    guarded(|| {
        non_null(out, "out")?;
        *out = is_supermodular(&game_ref(g)?.game);
        Ok(())
    })
}

/// Writes the game's JSON encoding to `*out`.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_game_to_json(g: *const SmGame, out: *mut *mut c_char) -> SmStatus {
    guarded(|| {
        non_null(out, "out")?;
        let g = game_ref(g)?;
        write_string(out, json::game_to_json(&g.ground, &g.game).to_string())
    })
}

/// Writes the descriptor bundle as JSON to `*out`.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_game_descriptors_json(
    g: *const SmGame,
    out: *mut *mut c_char,
) -> SmStatus {
    guarded(|| {
        non_null(out, "out")?;
        let g = game_ref(g)?;
        let b = lib(descriptors(&g.game))?;
        write_string(out, json::bundle_to_json(&g.ground, &b).to_string())
    })
}

/// Writes the face-inclusion report for `(a, b)` as JSON to `*out`.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_compare_json(
    a: *const SmGame,
    b: *const SmGame,
    out: *mut *mut c_char,
) -> SmStatus {
    guarded(|| {
        non_null(out, "out")?;
        let (a, b) = (game_ref(a)?, game_ref(b)?);
        if a.ground != b.ground {
            set_error("the two games use different ground labels");
            return Err(SmStatus::InvalidInput);
        }
        let r = lib(theorem_report(&a.game, &b.game))?;
        write_string(out, json::report_to_json(&r).to_string())
    })
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_face_dimension(g: *const SmGame, out: *mut u32) -> SmStatus {
    guarded(|| {
        non_null(out, "out")?;
        *out = lib(face_dimension(&game_ref(g)?.game))? as u32;
        Ok(())
    })
}

/// Number of extreme rays of the standardized supermodular cone on `n` elements.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_extreme_ray_count(n: u32, force: bool, out: *mut u64) -> SmStatus {
    guarded(|| {
        non_null(out, "out")?;
        *out = lib(extreme_rays(n as usize, force))?.len() as u64;
        Ok(())
    })
}

/// Message of the last failed call on this thread, or an empty string.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn sm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by the library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
