"""Text rendering of monomials, binomials and command summaries."""


def format_monomial(m) -> str:
    """Render an X-monomial as ``x1*x3^2``; the unit monomial is ``1``."""
    parts = []
    for i, a in enumerate(m.exponents):
        if a == 1:
            parts.append(f"x{i + 1}")
        elif a > 1:
            parts.append(f"x{i + 1}^{a}")
    return "*".join(parts) or "1"


def format_ymonomial(mono: tuple[int, ...], presentation=None) -> str:
    """Render a presentation monomial (multiset of variable indices) as ``y1*y4`` or ``y2^2``."""
    if not mono:
        return "1"
    parts = []
    for v in sorted(set(mono)):
        name = presentation.label(v) if presentation is not None else f"y{v + 1}"
        count = mono.count(v)
        parts.append(name if count == 1 else f"{name}^{count}")
    return "*".join(parts)


def format_binomial(binomial, presentation=None) -> str:
    return f"{format_ymonomial(binomial.lhs, presentation)} - {format_ymonomial(binomial.rhs, presentation)}"


def format_groebner_lines(gb, presentation=None) -> list[str]:
    """One ``lead - tail`` line per element, leading term first."""
    return [
        f"{format_ymonomial(lead, presentation)} - {format_ymonomial(tail, presentation)}"
        for lead, tail in gb.elements
    ]


def format_verdicts(verdicts: dict[str, bool]) -> str:
    if not verdicts:
        return "  (no checks)"
    width = max(len(name) for name in verdicts)
    return "\n".join(
        f"  {name:<{width}}  {'PASS' if ok else 'FAIL'}" for name, ok in sorted(verdicts.items())
    )


def format_summary(report, timings: dict[str, float] | None = None) -> str:
    """Human-readable summary of a Report for standard error."""
    passed = all(report.verdicts.values())
    lines = [
        f"{'=' * 50}",
        f"  {report.command}  ({'PASS' if passed else 'FAIL'})",
        f"{'=' * 50}",
        format_verdicts(report.verdicts),
    ]
    for key, value in sorted(report.properties.items()):
        if isinstance(value, (bool, int, str)) or value is None:
            lines.append(f"  {key}: {value}")
        elif isinstance(value, (list, tuple)) and len(value) <= 12:
            lines.append(f"  {key}: {', '.join(str(v) for v in value)}")
    if timings:
        for key, seconds in sorted(timings.items()):
            lines.append(f"  time[{key}]: {seconds:.3f}s")
    return "\n".join(lines)
