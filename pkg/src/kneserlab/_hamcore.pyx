# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled Hamiltonian cycle search kernel.

Twin of kneserlab._hamcore_py: identical algorithm, expansion order and
node accounting, so the two kernels are interchangeable and comparable.
See the pure-Python module for the algorithm description.
"""

import time

from libc.stdlib cimport free, malloc
from libc.string cimport memset

KERNEL_NAME = "cython"

FOUND = 0
DEAD = 1
BUDGET = 2

cdef struct State:
    int nv
    int start
    int max_deg
    int* off          # CSR offsets, nv + 1
    int* tgt          # CSR targets
    unsigned char* adj    # nv * nv adjacency matrix
    unsigned char* visited
    int* free_deg
    int* rank
    int* path
    int path_len
    int* cands        # per-depth candidate buffers, nv * max_deg
    int* queue        # BFS scratch
    unsigned char* reach
    long long nodes
    long long max_nodes
    double deadline


cdef bint _connected_from(State* st, int tip):
    """All unvisited vertices reachable from tip through unvisited ones."""
    cdef int head = 0, tail = 0, got = 0, want, i, w, x, y
    memset(st.reach, 0, st.nv)
    for i in range(st.off[tip], st.off[tip + 1]):
        w = st.tgt[i]
        if not st.visited[w] and not st.reach[w]:
            st.reach[w] = 1
            st.queue[tail] = w
            tail += 1
    want = st.nv - st.path_len
    got = tail
    while head < tail:
        x = st.queue[head]
        head += 1
        for i in range(st.off[x], st.off[x + 1]):
            y = st.tgt[i]
            if not st.visited[y] and not st.reach[y]:
                st.reach[y] = 1
                st.queue[tail] = y
                tail += 1
                got += 1
    return got == want


cdef int _extend(State* st, int tip):
    cdef int x, w, y, i, ncands, forced, avail, pos, j, key_fd, key_rk
    cdef bint forced_conflict
    cdef unsigned char* tip_row
    cdef unsigned char* start_row
    cdef int* cands

    st.nodes += 1
    if st.nodes > st.max_nodes:
        return BUDGET
    if st.nodes % 4096 == 0 and time.monotonic() > st.deadline:
        return BUDGET
    if st.path_len == st.nv:
        if st.adj[tip * st.nv + st.start]:
            return FOUND
        return DEAD
    tip_row = st.adj + tip * st.nv
    start_row = st.adj + st.start * st.nv

    cands = st.cands + st.path_len * st.max_deg
    ncands = 0
    forced = -1
    forced_conflict = False
    for x in range(st.nv):
        if st.visited[x]:
            continue
        avail = st.free_deg[x] + (1 if start_row[x] else 0)
        if tip_row[x]:
            if avail < 1:
                return DEAD
            cands[ncands] = x
            ncands += 1
            if avail == 1:
                if forced >= 0:
                    forced_conflict = True
                forced = x
        else:
            if avail < 2:
                return DEAD
    if ncands == 0:
        return DEAD
    if forced_conflict:
        return DEAD
    if forced >= 0:
        cands[0] = forced
        ncands = 1
    elif not _connected_from(st, tip):
        return DEAD

    # insertion sort by (free_deg, rank, index); total order, so it matches
    # the reference kernel's stable sort exactly
    for i in range(1, ncands):
        w = cands[i]
        key_fd = st.free_deg[w]
        key_rk = st.rank[w]
        j = i - 1
        while j >= 0 and (
            st.free_deg[cands[j]] > key_fd
            or (st.free_deg[cands[j]] == key_fd and st.rank[cands[j]] > key_rk)
            or (
                st.free_deg[cands[j]] == key_fd
                and st.rank[cands[j]] == key_rk
                and cands[j] > w
            )
        ):
            cands[j + 1] = cands[j]
            j -= 1
        cands[j + 1] = w

    for pos in range(ncands):
        w = cands[pos]
        st.visited[w] = 1
        st.path[st.path_len] = w
        st.path_len += 1
        for i in range(st.off[w], st.off[w + 1]):
            st.free_deg[st.tgt[i]] -= 1
        x = _extend(st, w)
        if x == FOUND:
            return FOUND  # leave the completed path in place
        for i in range(st.off[w], st.off[w + 1]):
            st.free_deg[st.tgt[i]] += 1
        st.path_len -= 1
        st.visited[w] = 0
        if x == BUDGET:
            return BUDGET
    return DEAD


def solve(neighbors, int start, rank, long long max_nodes, double max_seconds):
    """Search for a Hamiltonian cycle through `start`.

    Returns (status, cycle_vertices, nodes_expanded); same contract as the
    pure-Python kernel.
    """
    cdef int nv = len(neighbors)
    if nv == 0:
        return DEAD, [], 0
    if nv == 1:
        return FOUND, [start], 0

    cdef int n_edges2 = 0
    cdef int v, w, i
    for v in range(nv):
        n_edges2 += len(neighbors[v])

    cdef State st
    st.nv = nv
    st.start = start
    st.nodes = 0
    st.max_nodes = max_nodes
    st.deadline = time.monotonic() + max_seconds
    st.cands = NULL  # allocated last; keep _release safe on early failure
    st.off = <int*> malloc((nv + 1) * sizeof(int))
    st.tgt = <int*> malloc(n_edges2 * sizeof(int))
    st.adj = <unsigned char*> malloc(nv * nv)
    st.visited = <unsigned char*> malloc(nv)
    st.free_deg = <int*> malloc(nv * sizeof(int))
    st.rank = <int*> malloc(nv * sizeof(int))
    st.path = <int*> malloc(nv * sizeof(int))
    st.queue = <int*> malloc(nv * sizeof(int))
    st.reach = <unsigned char*> malloc(nv)
    if (st.off == NULL or st.tgt == NULL or st.adj == NULL
            or st.visited == NULL or st.free_deg == NULL or st.rank == NULL
            or st.path == NULL or st.queue == NULL or st.reach == NULL):
        _release(&st)
        raise MemoryError()

    memset(st.adj, 0, nv * nv)
    memset(st.visited, 0, nv)
    cdef int pos = 0
    st.max_deg = 1
    for v in range(nv):
        st.off[v] = pos
        row = neighbors[v]
        if len(row) > st.max_deg:
            st.max_deg = len(row)
        for w in row:
            st.tgt[pos] = w
            st.adj[v * nv + w] = 1
            pos += 1
        st.free_deg[v] = len(row)
        st.rank[v] = rank[v]
    st.off[nv] = pos
    st.cands = <int*> malloc(nv * st.max_deg * sizeof(int))
    if st.cands == NULL:
        _release(&st)
        raise MemoryError()

    st.path[0] = start
    st.path_len = 1
    st.visited[start] = 1
    for i in range(st.off[start], st.off[start + 1]):
        st.free_deg[st.tgt[i]] -= 1

    cdef int status = _extend(&st, start)
    out = [st.path[i] for i in range(st.path_len)] if status == FOUND else []
    nodes = st.nodes
    _release(&st)
    return status, out, nodes


cdef void _release(State* st):
    if st.off != NULL:
        free(st.off)
    if st.tgt != NULL:
        free(st.tgt)
    if st.adj != NULL:
        free(st.adj)
    if st.visited != NULL:
        free(st.visited)
    if st.free_deg != NULL:
        free(st.free_deg)
    if st.rank != NULL:
        free(st.rank)
    if st.path != NULL:
        free(st.path)
    if st.queue != NULL:
        free(st.queue)
    if st.reach != NULL:
        free(st.reach)
    if st.cands != NULL:
        free(st.cands)
