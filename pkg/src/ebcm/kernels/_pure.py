"""Pure-Python event kernels.

Every kernel consumes pre-drawn uniform random numbers and performs no RNG of
its own; the compiled backend mirrors these loops operation-for-operation so
the two produce bit-identical results on identical inputs.

Conventions shared by all kernels:
  * a processing-unit state is (x, regs): x = 2-entry frequency estimate,
    regs = 2x2 complex message registers (one 2-component message per port);
  * the transformation stage is stored as two 2x2 complex blocks, tp acting
    on message component 0 (P axis) and ts on component 1 (S axis); row k of
    a block is the amplitude pattern exiting port k;
  * output port = theta_step(z - r) where z is the port-1 intensity, with
    theta_step(0) = 1.
"""
from __future__ import annotations

import math

import numpy as np

BACKEND = "pure"

_DEGEN = 1e-15


def unit_step(x, regs, tp, ts, gamma, port, c1, c2, r):
    """One event through an adaptive two-port unit.

    Mutates (x, regs) in place; returns (out_port, out_c1, out_c2).
    """
    regs[port, 0] = c1
    regs[port, 1] = c2
    x[0] *= gamma
    x[1] *= gamma
    x[port] += 1.0 - gamma
    w0 = math.sqrt(x[0])
    w1 = math.sqrt(x[1])
    a0 = w0 * regs[0, 0]
    a1 = w1 * regs[1, 0]
    b0 = w0 * regs[0, 1]
    b1 = w1 * regs[1, 1]
    z0p = tp[0, 0] * a0 + tp[0, 1] * a1
    z0s = ts[0, 0] * b0 + ts[0, 1] * b1
    z1p = tp[1, 0] * a0 + tp[1, 1] * a1
    z1s = ts[1, 0] * b0 + ts[1, 1] * b1
    z1 = z1p.real * z1p.real + z1p.imag * z1p.imag + z1s.real * z1s.real + z1s.imag * z1s.imag
    z0 = z0p.real * z0p.real + z0p.imag * z0p.imag + z0s.real * z0s.real + z0s.imag * z0s.imag
    if z1 < _DEGEN and z0 < _DEGEN:
        # Degenerate registers: deterministic fallback, port 0 with its register.
        return 0, regs[0, 0], regs[0, 1]
    if z1 - r >= 0.0:
        nrm = math.sqrt(z1)
        return 1, z1p / nrm, z1s / nrm
    nrm = math.sqrt(z0)
    return 0, z0p / nrm, z0s / nrm


def detector_step(x, regs, gamma_hat, port, c1, c2, r):
    """One event into an adaptive detector; returns (click, intensity)."""
    n = x.shape[0]
    for k in range(n):
        x[k] *= gamma_hat
    x[port] += 1.0 - gamma_hat
    regs[port, 0] = c1
    regs[port, 1] = c2
    t0 = 0.0 + 0.0j
    t1 = 0.0 + 0.0j
    for k in range(n):
        t0 += x[k] * regs[k, 0]
        t1 += x[k] * regs[k, 1]
    p = t0.real * t0.real + t0.imag * t0.imag + t1.real * t1.real + t1.imag * t1.imag
    click = 1 if p - r >= 0.0 else 0
    return click, p


def scalar_dlm_run(x0, gamma, fast, ys):
    n = ys.shape[0]
    xs = np.empty(n, dtype=np.float64)
    deltas = np.empty(n, dtype=np.uint8)
    x = x0
    for i in range(n):
        y = ys[i]
        g = gamma
        if fast:
            g = min(1.0 - abs(x - y), gamma)
        lo = g * x
        hi = lo + (1.0 - g)
        if abs(lo - y) <= abs(hi - y):
            deltas[i] = 0
            x = lo
        else:
            deltas[i] = 1
            x = hi
        xs[i] = x
    return xs, deltas


def vector_dlm_run(x0, gamma, vs):
    n, d = vs.shape
    traj = np.empty((n, d), dtype=np.float64)
    x = np.array(x0, dtype=np.float64)
    for i in range(n):
        for j in range(d):
            x[j] = gamma * x[j] + (1.0 - gamma) * vs[i, j]
            traj[i, j] = x[j]
    return traj


def unit_stream(x, regs, tp, ts, gamma, ports, msgs, rs):
    """Stream n messengers through one unit; returns (out_ports, out_msgs)."""
    n = rs.shape[0]
    out_ports = np.empty(n, dtype=np.uint8)
    out_msgs = np.empty((n, 2), dtype=np.complex128)
    for i in range(n):
        p, c1, c2 = unit_step(x, regs, tp, ts, gamma, ports[i], msgs[i, 0], msgs[i, 1], rs[i])
        out_ports[i] = p
        out_msgs[i, 0] = c1
        out_msgs[i, 1] = c2
    return out_ports, out_msgs


def plate_stream(
    xa, regsa, tpa, tsa, xb, regsb, tpb, tsb, gamma, msg, leg_phase_factor, n_events, rs, max_bounces
):
    """Two-unit loop topology: unit A faces the outside, unit B the far side.

    Each messenger enters A at port 0 and loops A<->B (gaining one leg phase
    per crossing of the interior) until it exits to the reflected (A port 0)
    or transmitted (B port 1) detector.  Returns (n_reflected, n_transmitted,
    draws_used).  Raises RuntimeError if the draw pool or bounce cap is
    exhausted.
    """
    n_rs = rs.shape[0]
    cursor = 0
    n_refl = 0
    n_trans = 0
    for _ in range(n_events):
        c1 = msg[0]
        c2 = msg[1]
        port = 0
        at_a = True
        bounces = 0
        while True:
            if bounces > max_bounces:
                raise RuntimeError("loop bounce cap exceeded")
            if cursor >= n_rs:
                raise RuntimeError("random-number pool exhausted")
            r = rs[cursor]
            cursor += 1
            if at_a:
                p, c1, c2 = unit_step(xa, regsa, tpa, tsa, gamma, port, c1, c2, r)
                if p == 0:
                    n_refl += 1
                    break
                c1 *= leg_phase_factor
                c2 *= leg_phase_factor
                at_a = False
                port = 0
            else:
                p, c1, c2 = unit_step(xb, regsb, tpb, tsb, gamma, port, c1, c2, r)
                if p == 1:
                    n_trans += 1
                    break
                c1 *= leg_phase_factor
                c2 *= leg_phase_factor
                at_a = True
                port = 1
            bounces += 1
    return n_refl, n_trans, cursor


def mzi_stream(x1, regs1, x2, regs2, tp1, ts1, gamma, msg, ph0, ph1, rs):
    """Two-unit interferometer; arm k multiplies by phase factor phk.

    Both units share the same transformation blocks.  Returns counts
    (n0, n1) at the two outputs of the second unit.
    """
    n = rs.shape[0]
    n0 = 0
    n1 = 0
    for i in range(n):
        p, c1, c2 = unit_step(x1, regs1, tp1, ts1, gamma, 0, msg[0], msg[1], rs[i, 0])
        ph = ph0 if p == 0 else ph1
        c1 *= ph
        c2 *= ph
        p, c1, c2 = unit_step(x2, regs2, tp1, ts1, gamma, p, c1, c2, rs[i, 1])
        if p == 0:
            n0 += 1
        else:
            n1 += 1
    return n0, n1


def wheeler_stream(
    xp1, regsp1, xp2, regsp2, xwp, regswp, tp_pbs, ts_pbs, gamma, msg, ph0, ph1, m_off, m_on, rs
):
    """Delayed-choice interferometer.

    Polarizing unit 1 splits, arms apply phase factors, polarizing unit 2
    recombines on its port 0 (port-1 exits are lost events, recorded as -1).
    Only then is the choice bit drawn; it selects one of two 2x2 modulator
    matrices applied to the message before the adaptive analyzer (another
    polarizing unit) routes to the detectors.  D0 is the analyzer's port 1.

    Returns (choice_bits, detector_ids) per event, detector -1 for lost.
    """
    n = rs.shape[0]
    choice = np.empty(n, dtype=np.uint8)
    det = np.empty(n, dtype=np.int8)
    for i in range(n):
        p, c1, c2 = unit_step(xp1, regsp1, tp_pbs, ts_pbs, gamma, 0, msg[0], msg[1], rs[i, 0])
        ph = ph0 if p == 0 else ph1
        c1 *= ph
        c2 *= ph
        p, c1, c2 = unit_step(xp2, regsp2, tp_pbs, ts_pbs, gamma, p, c1, c2, rs[i, 1])
        rn = 0 if rs[i, 2] < 0.5 else 1
        choice[i] = rn
        if p == 1:
            det[i] = -1
            continue
        m = m_on if rn == 1 else m_off
        d1 = m[0, 0] * c1 + m[0, 1] * c2
        d2 = m[1, 0] * c1 + m[1, 1] * c2
        p, c1, c2 = unit_step(xwp, regswp, tp_pbs, ts_pbs, gamma, 0, d1, d2, rs[i, 3])
        det[i] = 0 if p == 1 else 1
    return choice, det


def eraser_stream(
    x1, regs1, x2, regs2, xwp, regswp, tbs, tp_pbs, ts_pbs, gamma, msg, ph1, m_arm0, m_out, rs
):
    """Interferometer with a polarization tag in arm 0 and an analysis train.

    Arm 0 applies matrix m_arm0, arm 1 the phase factor ph1; the second
    beam-mixing unit's port 1 feeds the stateless analysis matrix m_out and
    an adaptive polarizing analyzer (D0 = analyzer port 1); its port 0 is
    unmonitored (lost).  Returns (n_d0, n_d1, n_lost).
    """
    n = rs.shape[0]
    n0 = 0
    n1 = 0
    lost = 0
    for i in range(n):
        p, c1, c2 = unit_step(x1, regs1, tbs, tbs, gamma, 0, msg[0], msg[1], rs[i, 0])
        if p == 0:
            d1 = m_arm0[0, 0] * c1 + m_arm0[0, 1] * c2
            d2 = m_arm0[1, 0] * c1 + m_arm0[1, 1] * c2
            c1, c2 = d1, d2
        else:
            c1 *= ph1
            c2 *= ph1
        p, c1, c2 = unit_step(x2, regs2, tbs, tbs, gamma, p, c1, c2, rs[i, 1])
        if p == 0:
            lost += 1
            continue
        d1 = m_out[0, 0] * c1 + m_out[0, 1] * c2
        d2 = m_out[1, 0] * c1 + m_out[1, 1] * c2
        p, c1, c2 = unit_step(xwp, regswp, tp_pbs, ts_pbs, gamma, 0, d1, d2, rs[i, 2])
        if p == 1:
            n0 += 1
        else:
            n1 += 1
    return n0, n1, lost


def two_beam_stream(x, regs, gamma_hat, det_idx, port_idx, msgs, rs):
    """Stream of messengers into an array of multi-port detectors.

    x is (n_det, n_ports), regs is (n_det, n_ports, 2).  Returns the click
    bit per event.
    """
    n = rs.shape[0]
    clicks = np.empty(n, dtype=np.uint8)
    for i in range(n):
        d = det_idx[i]
        click, _ = detector_step(x[d], regs[d], gamma_hat, port_idx[i], msgs[i, 0], msgs[i, 1], rs[i])
        clicks[i] = click
    return clicks


def hbt_stream(x, regs, gamma_hat, phases, route, tof, r_click, r_delay, t_max, h, window):
    """Paired-source intensity-interferometry loop.

    Per pair step, the two sources emit messengers with common-mode phases
    phases[i, s]; each is routed to detector route[i, s] (0 or 1) and arrives
    with extra phase 2*pi*tof[s, m] (phase factors are precomputed in
    `phases` as complex factors per destination: phases[i, s, m]).  x and
    regs hold the two detectors' states, shape (2, 2) and (2, 2, 2).

    Counts same-step double clicks (base mode) and, with the time-delay
    model, double clicks whose click-time difference is within `window`.
    Returns (clicks0, clicks1, coinc_base, coinc_delay).
    """
    n = route.shape[0]
    counts0 = 0
    counts1 = 0
    coinc = 0
    coinc_w = 0
    for i in range(n):
        clicked = [False, False]
        tclick = [0.0, 0.0]
        for s in range(2):
            m = route[i, s]
            ph = phases[i, s, m]
            click, p = detector_step(x[m], regs[m], gamma_hat, s, ph, 0.0 + 0.0j, r_click[i, s])
            if click:
                if m == 0:
                    counts0 += 1
                else:
                    counts1 += 1
                if not clicked[m]:
                    clicked[m] = True
                    q = 1.0 - p
                    qp = 1.0
                    for _ in range(h):
                        qp *= q
                    tclick[m] = tof[s, m] + r_delay[i, s] * t_max * qp
        if clicked[0] and clicked[1]:
            coinc += 1
            if window - abs(tclick[0] - tclick[1]) >= 0.0:
                coinc_w += 1
    return counts0, counts1, coinc, coinc_w
