# Rendering del ValidationReport (testo e JSON) e politica degli exit code della CLI.

import json

from colorama import Fore, Style

from Validator.validator import ERROR, WARNING

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2

_COLORS = {ERROR: Fore.RED, WARNING: Fore.YELLOW}


def diagnostic_to_dict(diagnostic):
    record = {
        "code": diagnostic.code,
        "severity": diagnostic.severity,
        "message": diagnostic.message,
        "subjects": list(diagnostic.subjects),
    }
    if diagnostic.axiom_id is not None:
        record["axiom_id"] = diagnostic.axiom_id
    if diagnostic.witness:
        record["witness"] = dict(diagnostic.witness)
    return record


def report_to_dict(report):
    return {
        "verdict": report.verdict,
        "mode": report.mode,
        "counts": dict(report.counts),
        "diagnostics": [diagnostic_to_dict(d) for d in report.diagnostics],
    }


def render_json(report, indent=4):
    return json.dumps(report_to_dict(report), indent=indent, ensure_ascii=False) + "\n"


def render_text(report, color=False):
    lines = []
    for d in report.diagnostics:
        subjects = ",".join(d.subjects) if d.subjects else "-"
        severity = d.severity
        if color:
            severity = _COLORS[d.severity] + severity + Style.RESET_ALL
        lines.append(f"{d.code} {severity} {subjects}: {d.message}")
    verdict = report.verdict
    if color:
        verdict = (Fore.GREEN if verdict == "pass" else Fore.RED) + Style.BRIGHT + verdict + Style.RESET_ALL
    counts = report.counts
    lines.append(f"verdict: {verdict} ({counts['errors']} error(s), {counts['warnings']} warning(s), mode {report.mode})")
    return "\n".join(lines) + "\n"


def exit_code(report, fail_on="error"):
    """1 se esiste almeno un risultato alla soglia --fail-on o sopra, altrimenti 0."""
    if fail_on == WARNING:
        return EXIT_FINDINGS if report.diagnostics else EXIT_OK
    return EXIT_FINDINGS if report.counts["errors"] else EXIT_OK
