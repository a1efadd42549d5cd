# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled event kernels: operation-for-operation mirror of the pure backend."""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()

BACKEND = "fast"

cdef double _DEGEN = 1e-15


cdef inline int _unit_step(double* x, double complex* regs,
                           double complex* tp, double complex* ts,
                           double gamma, int port,
                           double complex c1, double complex c2, double r,
                           double complex* oc1, double complex* oc2) nogil:
    cdef double w0, w1, z0, z1, nrm
    cdef double complex a0, a1, b0, b1, z0p, z0s, z1p, z1s
    regs[2 * port] = c1
    regs[2 * port + 1] = c2
    x[0] *= gamma
    x[1] *= gamma
    x[port] += 1.0 - gamma
    w0 = sqrt(x[0])
    w1 = sqrt(x[1])
    a0 = w0 * regs[0]
    a1 = w1 * regs[2]
    b0 = w0 * regs[1]
    b1 = w1 * regs[3]
    z0p = tp[0] * a0 + tp[1] * a1
    z0s = ts[0] * b0 + ts[1] * b1
    z1p = tp[2] * a0 + tp[3] * a1
    z1s = ts[2] * b0 + ts[3] * b1
    z1 = z1p.real * z1p.real + z1p.imag * z1p.imag + z1s.real * z1s.real + z1s.imag * z1s.imag
    z0 = z0p.real * z0p.real + z0p.imag * z0p.imag + z0s.real * z0s.real + z0s.imag * z0s.imag
    if z1 < _DEGEN and z0 < _DEGEN:
        oc1[0] = regs[0]
        oc2[0] = regs[1]
        return 0
    if z1 - r >= 0.0:
        nrm = sqrt(z1)
        oc1[0] = z1p / nrm
        oc2[0] = z1s / nrm
        return 1
    nrm = sqrt(z0)
    oc1[0] = z0p / nrm
    oc2[0] = z0s / nrm
    return 0


cdef inline int _detector_step(double* x, double complex* regs, int n,
                               double gamma_hat, int port,
                               double complex c1, double complex c2, double r,
                               double* p_out) nogil:
    cdef int k
    cdef double complex t0 = 0, t1 = 0
    cdef double p
    for k in range(n):
        x[k] *= gamma_hat
    x[port] += 1.0 - gamma_hat
    regs[2 * port] = c1
    regs[2 * port + 1] = c2
    for k in range(n):
        t0 = t0 + x[k] * regs[2 * k]
        t1 = t1 + x[k] * regs[2 * k + 1]
    p = t0.real * t0.real + t0.imag * t0.imag + t1.real * t1.real + t1.imag * t1.imag
    p_out[0] = p
    return 1 if p - r >= 0.0 else 0


def scalar_dlm_run(double x0, double gamma, bint fast, double[::1] ys):
    cdef Py_ssize_t n = ys.shape[0], i
    xs_arr = np.empty(n, dtype=np.float64)
    deltas_arr = np.empty(n, dtype=np.uint8)
    cdef double[::1] xs = xs_arr
    cdef unsigned char[::1] deltas = deltas_arr
    cdef double x = x0, y, g, lo, hi
    for i in range(n):
        y = ys[i]
        g = gamma
        if fast:
            if 1.0 - fabs(x - y) < g:
                g = 1.0 - fabs(x - y)
        lo = g * x
        hi = lo + (1.0 - g)
        if fabs(lo - y) <= fabs(hi - y):
            deltas[i] = 0
            x = lo
        else:
            deltas[i] = 1
            x = hi
        xs[i] = x
    return xs_arr, deltas_arr


def vector_dlm_run(double[::1] x0, double gamma, double[:, ::1] vs):
    cdef Py_ssize_t n = vs.shape[0], d = vs.shape[1], i, j
    traj_arr = np.empty((n, d), dtype=np.float64)
    cdef double[:, ::1] traj = traj_arr
    x_arr = np.array(x0, dtype=np.float64)
    cdef double[::1] x = x_arr
    for i in range(n):
        for j in range(d):
            x[j] = gamma * x[j] + (1.0 - gamma) * vs[i, j]
            traj[i, j] = x[j]
    return traj_arr


def unit_stream(double[::1] x, double complex[:, ::1] regs,
                double complex[:, ::1] tp, double complex[:, ::1] ts,
                double gamma, unsigned char[::1] ports,
                double complex[:, ::1] msgs, double[::1] rs):
    cdef Py_ssize_t n = rs.shape[0], i
    out_ports_arr = np.empty(n, dtype=np.uint8)
    out_msgs_arr = np.empty((n, 2), dtype=np.complex128)
    cdef unsigned char[::1] out_ports = out_ports_arr
    cdef double complex[:, ::1] out_msgs = out_msgs_arr
    cdef double complex oc1, oc2
    cdef int p
    for i in range(n):
        p = _unit_step(&x[0], &regs[0, 0], &tp[0, 0], &ts[0, 0], gamma,
                       ports[i], msgs[i, 0], msgs[i, 1], rs[i], &oc1, &oc2)
        out_ports[i] = <unsigned char> p
        out_msgs[i, 0] = oc1
        out_msgs[i, 1] = oc2
    return out_ports_arr, out_msgs_arr


def plate_stream(double[::1] xa, double complex[:, ::1] regsa,
                 double complex[:, ::1] tpa, double complex[:, ::1] tsa,
                 double[::1] xb, double complex[:, ::1] regsb,
                 double complex[:, ::1] tpb, double complex[:, ::1] tsb,
                 double gamma, double complex[::1] msg,
                 double complex leg_phase_factor, Py_ssize_t n_events,
                 double[::1] rs, long max_bounces):
    cdef Py_ssize_t n_rs = rs.shape[0], cursor = 0, ev
    cdef long n_refl = 0, n_trans = 0, bounces
    cdef double complex c1, c2, oc1, oc2
    cdef int port, p
    cdef bint at_a
    for ev in range(n_events):
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
            if at_a:
                p = _unit_step(&xa[0], &regsa[0, 0], &tpa[0, 0], &tsa[0, 0], gamma,
                               port, c1, c2, rs[cursor], &oc1, &oc2)
                cursor += 1
                if p == 0:
                    n_refl += 1
                    break
                c1 = oc1 * leg_phase_factor
                c2 = oc2 * leg_phase_factor
                at_a = False
                port = 0
            else:
                p = _unit_step(&xb[0], &regsb[0, 0], &tpb[0, 0], &tsb[0, 0], gamma,
                               port, c1, c2, rs[cursor], &oc1, &oc2)
                cursor += 1
                if p == 1:
                    n_trans += 1
                    break
                c1 = oc1 * leg_phase_factor
                c2 = oc2 * leg_phase_factor
                at_a = True
                port = 1
            bounces += 1
    return n_refl, n_trans, cursor


def mzi_stream(double[::1] x1, double complex[:, ::1] regs1,
               double[::1] x2, double complex[:, ::1] regs2,
               double complex[:, ::1] tp1, double complex[:, ::1] ts1,
               double gamma, double complex[::1] msg,
               double complex ph0, double complex ph1, double[:, ::1] rs):
    cdef Py_ssize_t n = rs.shape[0], i
    cdef long n0 = 0, n1 = 0
    cdef double complex c1, c2, ph
    cdef int p
    for i in range(n):
        p = _unit_step(&x1[0], &regs1[0, 0], &tp1[0, 0], &ts1[0, 0], gamma,
                       0, msg[0], msg[1], rs[i, 0], &c1, &c2)
        ph = ph0 if p == 0 else ph1
        c1 *= ph
        c2 *= ph
        p = _unit_step(&x2[0], &regs2[0, 0], &tp1[0, 0], &ts1[0, 0], gamma,
                       p, c1, c2, rs[i, 1], &c1, &c2)
        if p == 0:
            n0 += 1
        else:
            n1 += 1
    return n0, n1


def wheeler_stream(double[::1] xp1, double complex[:, ::1] regsp1,
                   double[::1] xp2, double complex[:, ::1] regsp2,
                   double[::1] xwp, double complex[:, ::1] regswp,
                   double complex[:, ::1] tp_pbs, double complex[:, ::1] ts_pbs,
                   double gamma, double complex[::1] msg,
                   double complex ph0, double complex ph1,
                   double complex[:, ::1] m_off, double complex[:, ::1] m_on,
                   double[:, ::1] rs):
    cdef Py_ssize_t n = rs.shape[0], i
    choice_arr = np.empty(n, dtype=np.uint8)
    det_arr = np.empty(n, dtype=np.int8)
    cdef unsigned char[::1] choice = choice_arr
    cdef signed char[::1] det = det_arr
    cdef double complex c1, c2, d1, d2, ph
    cdef double complex[:, ::1] m
    cdef int p, rn
    for i in range(n):
        p = _unit_step(&xp1[0], &regsp1[0, 0], &tp_pbs[0, 0], &ts_pbs[0, 0], gamma,
                       0, msg[0], msg[1], rs[i, 0], &c1, &c2)
        ph = ph0 if p == 0 else ph1
        c1 *= ph
        c2 *= ph
        p = _unit_step(&xp2[0], &regsp2[0, 0], &tp_pbs[0, 0], &ts_pbs[0, 0], gamma,
                       p, c1, c2, rs[i, 1], &c1, &c2)
        rn = 0 if rs[i, 2] < 0.5 else 1
        choice[i] = <unsigned char> rn
        if p == 1:
            det[i] = -1
            continue
        m = m_on if rn == 1 else m_off
        d1 = m[0, 0] * c1 + m[0, 1] * c2
        d2 = m[1, 0] * c1 + m[1, 1] * c2
        p = _unit_step(&xwp[0], &regswp[0, 0], &tp_pbs[0, 0], &ts_pbs[0, 0], gamma,
                       0, d1, d2, rs[i, 3], &c1, &c2)
        det[i] = 0 if p == 1 else 1
    return choice_arr, det_arr


def eraser_stream(double[::1] x1, double complex[:, ::1] regs1,
                  double[::1] x2, double complex[:, ::1] regs2,
                  double[::1] xwp, double complex[:, ::1] regswp,
                  double complex[:, ::1] tbs,
                  double complex[:, ::1] tp_pbs, double complex[:, ::1] ts_pbs,
                  double gamma, double complex[::1] msg, double complex ph1,
                  double complex[:, ::1] m_arm0, double complex[:, ::1] m_out,
                  double[:, ::1] rs):
    cdef Py_ssize_t n = rs.shape[0], i
    cdef long n0 = 0, n1 = 0, lost = 0
    cdef double complex c1, c2, d1, d2
    cdef int p
    for i in range(n):
        p = _unit_step(&x1[0], &regs1[0, 0], &tbs[0, 0], &tbs[0, 0], gamma,
                       0, msg[0], msg[1], rs[i, 0], &c1, &c2)
        if p == 0:
            d1 = m_arm0[0, 0] * c1 + m_arm0[0, 1] * c2
            d2 = m_arm0[1, 0] * c1 + m_arm0[1, 1] * c2
            c1 = d1
            c2 = d2
        else:
            c1 *= ph1
            c2 *= ph1
        p = _unit_step(&x2[0], &regs2[0, 0], &tbs[0, 0], &tbs[0, 0], gamma,
                       p, c1, c2, rs[i, 1], &c1, &c2)
        if p == 0:
            lost += 1
            continue
        d1 = m_out[0, 0] * c1 + m_out[0, 1] * c2
        d2 = m_out[1, 0] * c1 + m_out[1, 1] * c2
        p = _unit_step(&xwp[0], &regswp[0, 0], &tp_pbs[0, 0], &ts_pbs[0, 0], gamma,
                       0, d1, d2, rs[i, 2], &c1, &c2)
        if p == 1:
            n0 += 1
        else:
            n1 += 1
    return n0, n1, lost


def two_beam_stream(double[:, ::1] x, double complex[:, :, ::1] regs,
                    double gamma_hat, long[::1] det_idx, long[::1] port_idx,
                    double complex[:, ::1] msgs, double[::1] rs):
    cdef Py_ssize_t n = rs.shape[0], i
    cdef int n_ports = <int> x.shape[1]
    clicks_arr = np.empty(n, dtype=np.uint8)
    cdef unsigned char[::1] clicks = clicks_arr
    cdef double p
    cdef long d
    for i in range(n):
        d = det_idx[i]
        clicks[i] = <unsigned char> _detector_step(
            &x[d, 0], &regs[d, 0, 0], n_ports, gamma_hat,
            <int> port_idx[i], msgs[i, 0], msgs[i, 1], rs[i], &p)
    return clicks_arr


def hbt_stream(double[:, ::1] x, double complex[:, :, ::1] regs, double gamma_hat,
               double complex[:, :, ::1] phases, unsigned char[:, ::1] route,
               double[:, ::1] tof, double[:, ::1] r_click, double[:, ::1] r_delay,
               double t_max, int h, double window):
    cdef Py_ssize_t n = route.shape[0], i
    cdef long counts0 = 0, counts1 = 0, coinc = 0, coinc_w = 0
    cdef bint clicked0, clicked1
    cdef double tclick0 = 0.0, tclick1 = 0.0
    cdef double p, q, qp, t
    cdef int s, m, k, click
    cdef double complex ph
    for i in range(n):
        clicked0 = False
        clicked1 = False
        for s in range(2):
            m = route[i, s]
            ph = phases[i, s, m]
            click = _detector_step(&x[m, 0], &regs[m, 0, 0], 2, gamma_hat,
                                   s, ph, 0, r_click[i, s], &p)
            if click:
                if m == 0:
                    counts0 += 1
                else:
                    counts1 += 1
                if (m == 0 and not clicked0) or (m == 1 and not clicked1):
                    q = 1.0 - p
                    qp = 1.0
                    for k in range(h):
                        qp *= q
                    t = tof[s, m] + r_delay[i, s] * t_max * qp
                    if m == 0:
                        clicked0 = True
                        tclick0 = t
                    else:
                        clicked1 = True
                        tclick1 = t
        if clicked0 and clicked1:
            coinc += 1
            if window - fabs(tclick0 - tclick1) >= 0.0:
                coinc_w += 1
    return counts0, counts1, coinc, coinc_w
