//! Minimal HTTP/1.1 front end over std networking.
//!
//! The service only ever answers small GET requests, so the server is a
//! nonblocking accept loop with one short-lived thread per connection
//! and no shared mutable state: the config snapshot is immutable for
//! the process lifetime and every request re-reads sidecars from disk.

use std::io::{self, Read, Write};
use std::net::{SocketAddr, TcpListener, TcpStream};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::thread;
use std::time::Duration;

use thiserror::Error;

use crate::config::WlsConfig;
use crate::handlers::{handle_request, HttpResponse};

const MAX_REQUEST_HEAD: usize = 16 * 1024;
const ACCEPT_POLL: Duration = Duration::from_millis(25);
const READ_TIMEOUT: Duration = Duration::from_secs(10);

#[derive(Debug, Error)]
pub enum ServeError {
    #[error("cannot bind {addr}: {source}")]
    Bind {
        addr: String,
        #[source]
        source: io::Error,
    },

    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Cooperative stop switch for a running server.
#[derive(Debug, Clone)]
pub struct ShutdownHandle(Arc<AtomicBool>);

impl ShutdownHandle {
    pub fn shutdown(&self) {
        self.0.store(true, Ordering::SeqCst);
    }
}

/// A bound, not-yet-running license server.
pub struct WlsServer {
    listener: TcpListener,
    config: Arc<WlsConfig>,
    stop: Arc<AtomicBool>,
}

impl WlsServer {
    /// Binds the configured address (port 0 picks an ephemeral port).
    pub fn bind(config: WlsConfig) -> Result<WlsServer, ServeError> {
        let addr = format!("{}:{}", config.bind, config.port);
        let listener =
            TcpListener::bind(&addr).map_err(|source| ServeError::Bind { addr, source })?;
        listener.set_nonblocking(true)?;
        Ok(WlsServer {
            listener,
            config: Arc::new(config),
            stop: Arc::new(AtomicBool::new(false)),
        })
    }

    pub fn local_addr(&self) -> io::Result<SocketAddr> {
        self.listener.local_addr()
    }

    pub fn shutdown_handle(&self) -> ShutdownHandle {
        ShutdownHandle(Arc::clone(&self.stop))
    }

    /// Accepts and serves connections until a shutdown is requested via
    /// [`ShutdownHandle`] or a termination signal.
    pub fn run(&self) -> io::Result<()> {
        loop {
            if self.stop.load(Ordering::SeqCst) || SIGNAL_SHUTDOWN.load(Ordering::SeqCst) {
                return Ok(());
            }
            match self.listener.accept() {
                Ok((stream, _peer)) => {
                    let config = Arc::clone(&self.config);
                    thread::spawn(move || {
                        let _ = serve_connection(stream, &config);
                    });
                }
                Err(e) if e.kind() == io::ErrorKind::WouldBlock => thread::sleep(ACCEPT_POLL),
                Err(e) if e.kind() == io::ErrorKind::Interrupted => {}
                Err(e) => return Err(e),
            }
        }
    }
}

/// Binds, installs signal handlers, and runs until terminated. This is
/// the long-running entry point behind the `serve` command.
pub fn serve(config: WlsConfig) -> Result<(), ServeError> {
    let server = WlsServer::bind(config)?;
    install_signal_handlers();
    eprintln!("wls: listening on http://{}/wls", server.local_addr()?);
    server.run()?;
    eprintln!("wls: shutting down");
    Ok(())
}

static SIGNAL_SHUTDOWN: AtomicBool = AtomicBool::new(false);

extern "C" fn on_terminate(_signal: libc::c_int) {
    SIGNAL_SHUTDOWN.store(true, Ordering::SeqCst);
}

fn install_signal_handlers() {
    let handler = on_terminate as *const () as libc::sighandler_t;
    unsafe {
        libc::signal(libc::SIGINT, handler);
        libc::signal(libc::SIGTERM, handler);
    }
}

fn serve_connection(mut stream: TcpStream, config: &WlsConfig) -> io::Result<()> {
    stream.set_nonblocking(false)?;
    stream.set_read_timeout(Some(READ_TIMEOUT))?;

    let response = match read_request_head(&mut stream) {
        Ok(head) => match parse_request_line(&head) {
            Some((method, target)) => {
                let (path, query) = match target.split_once('?') {
                    Some((path, query)) => (path, query),
                    None => (target, ""),
                };
                handle_request(config, method, path, query)
            }
            None => bad_request("malformed request line"),
        },
        Err(_) => bad_request("unreadable request"),
    };
    write_response(&mut stream, &response)
}

fn bad_request(detail: &str) -> HttpResponse {
    HttpResponse {
        status: 400,
        content_type: "application/json",
        body: serde_json::to_vec(&serde_json::json!({ "error": "BadRequest", "detail": detail }))
            .expect("JSON value serializes"),
    }
}

/// Reads until the end of the header block; the body, if any, is
/// ignored (GET only).
fn read_request_head(stream: &mut TcpStream) -> io::Result<String> {
    let mut head = Vec::new();
    let mut chunk = [0u8; 1024];
    loop {
        let n = stream.read(&mut chunk)?;
        if n == 0 {
            break;
        }
        head.extend_from_slice(&chunk[..n]);
        if head.windows(4).any(|w| w == b"\r\n\r\n") || head.len() > MAX_REQUEST_HEAD {
            break;
        }
    }
    Ok(String::from_utf8_lossy(&head).into_owned())
}

fn parse_request_line(head: &str) -> Option<(&str, &str)> {
    let line = head.lines().next()?;
    let mut parts = line.split_whitespace();
    let method = parts.next()?;
    let target = parts.next()?;
    let version = parts.next()?;
    version.starts_with("HTTP/").then_some((method, target))
}

fn status_text(status: u16) -> &'static str {
    match status {
        200 => "OK",
        400 => "Bad Request",
        404 => "Not Found",
        405 => "Method Not Allowed",
        500 => "Internal Server Error",
        _ => "Error",
    }
}

fn write_response(stream: &mut TcpStream, response: &HttpResponse) -> io::Result<()> {
    let mut head = format!(
        "HTTP/1.1 {} {}\r\nContent-Type: {}\r\nContent-Length: {}\r\nConnection: close\r\n",
        response.status,
        status_text(response.status),
        response.content_type,
        response.body.len()
    );
    if response.status == 405 {
        head.push_str("Allow: GET\r\n");
    }
    head.push_str("\r\n");
    stream.write_all(head.as_bytes())?;
    stream.write_all(&response.body)?;
    stream.flush()
}
