# DESCRIZIONE: generatore deterministico di knowledge base conformi a TestTDO.
    # 1) istanzia il motivo minimo (23 individui) che chiude tutti i limiti inferiori e gli assiomi;
    # 2) lo fa crescere con estensioni casuali che rispettano i vincoli;
    # 3) calcola la classificazione dei Testable Entity e ripara con il validatore i residui.
    # Sorgente pseudo-casuale: numpy PCG64 inizializzato direttamente con il seed a 64 bit.

import os
import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import yaml

from errors import ConfigError, GeneratorError
from KnowledgeBase.kb import KnowledgeBase
from Schema.schema import CLASSIFICATION_ATTR, builtin_schema
from Validator.validator import validate

logger = logging.getLogger(__name__)

FILE_PATH = os.path.join(os.path.dirname(__file__), 'config.yaml')

SEED_LIMIT = 2 ** 64
MOTIF_SIZE = 23


@lru_cache(maxsize=1)
def generator_settings(path=FILE_PATH):
    # lettura del file config.yaml
    try:
        with open(path, 'r', encoding='utf-8') as file:
            data = yaml.safe_load(file)
        settings = {
            "MAX_SIZE": int(data['GENERATOR']['MAX_SIZE']),
            "REPAIR_ROUNDS": int(data['GENERATOR']['REPAIR_ROUNDS']),
            "SIZE_TOLERANCE": float(data['GENERATOR']['SIZE_TOLERANCE']),
            "MAX_INDIVIDUALS": int(data['RANDOM_MODELS']['MAX_INDIVIDUALS']),
            "MAX_LINKS": int(data['RANDOM_MODELS']['MAX_LINKS']),
            "MAX_DEPTH": int(data['RANDOM_MODELS']['MAX_DEPTH']),
            "RESULTS": list(data['VALUES']['RESULTS']),
            "NAMES": list(data['VALUES']['NAMES']),
            "VERSIONS": list(data['VALUES']['VERSIONS']),
        }
    except (OSError, yaml.YAMLError, KeyError, TypeError, ValueError) as e:
        raise ConfigError(f"cannot load generator settings from {path}: {e}") from e
    if not settings["RESULTS"] or not settings["NAMES"] or not settings["VERSIONS"]:
        raise ConfigError(f"empty value pool in {path}")
    return settings


def make_rng(seed):
    return np.random.Generator(np.random.PCG64(seed))


def pick(rng, items):
    """Elemento scelto in modo uniforme da una sequenza non vuota (mantiene il tipo Python)."""
    return items[int(rng.integers(len(items)))]


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    size: int = 0
    mode: str = "conforming"

    def check(self, max_size):
        if not 0 <= self.seed < SEED_LIMIT:
            raise GeneratorError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if not 0 <= self.size <= max_size:
            raise GeneratorError(f"size must be between 0 and {max_size}, got {self.size}")
        if self.mode != "conforming":
            raise GeneratorError(f"unsupported generation mode '{self.mode}'")


class _Builder:
    """Stato della costruzione: la kb non finalizzata piu' gli indici per ruolo usati dalle estensioni."""

    def __init__(self, rng, settings):
        self.rng = rng
        self.settings = settings
        self.kb = KnowledgeBase()
        self.schema = builtin_schema()
        self.counters = {}
        self.by_role = {}

    # utilita' -------------------------------------------------------------------
    def fresh(self, prefix):
        self.counters[prefix] = self.counters.get(prefix, 0) + 1
        return f"{prefix}_{self.counters[prefix]}"

    def add(self, id, type_name, role=None, **attrs):
        allowed = {a.attr_name for a in self.schema.attributes_of(type_name, inherited=True)}
        if "name" in allowed and "name" not in attrs:
            attrs["name"] = pick(self.rng, self.settings["NAMES"])
        if "version" in allowed and "version" not in attrs:
            attrs["version"] = pick(self.rng, self.settings["VERSIONS"])
        self.kb.add_individual(id, type_name, attrs)
        self.by_role.setdefault(role or type_name, []).append(id)
        return id

    def link(self, rel_name, source, target):
        self.kb.add_link(rel_name, source, target)

    def role(self, name):
        return self.by_role.get(name, [])

    def any(self, name):
        return pick(self.rng, self.role(name))

    def result(self):
        return pick(self.rng, self.settings["RESULTS"])

    # motivo minimo -----------------------------------------------------------------
    def motif(self):
        ok = self.result()
        add, link = self.add, self.link
        add("tp", "TestProject", "project")
        add("tg", "TestGoal", "goal", label="G1")
        add("ts", "TestingStrategy", "strategy")
        add("tm", "TestingManagement", "management")
        add("tlc", "TestingLifeCycle", "life_cycle")
        add("tplan", "TestPlan", "plan")
        add("tps", "TestParticularSituation", "situation")
        add("te", "TestItem", "entity")
        add("tce", "TestContextEntity", "context")
        add("treq", "TestRequirement", "requirement", label="R1")
        add("tin", "TestInformationNeed", "information_need", label="IN1")
        add("p", "Testing", "process")
        add("trs", "TestRequirementSpecification", "requirement_spec")
        add("tpss", "TestParticularSituationSpecification", "situation_spec")
        add("role", "TestingRole", "role")
        add("agent", "TestingHumanAgent", "agent")
        add("dt", "DesignTesting", "design")
        add("rp", "RealizationProcedure", "procedure")
        add("tc", "TestCase", "spec", expected_result=ok)
        add("pt", "PerformTesting", "perform")
        add("ar", "ActualResult", "result", value=ok)
        add("at", "AnalyzeTestResults", "analyze")
        add("tcr", "TestConclusionReport", "report")
        self.by_role["activity"] = ["at", "dt", "pt"]

        # progetto, obiettivi e strategia (A8, A9)
        link("operationalizes", "tp", "tg")
        link("associates", "tp", "ts")
        link("defines", "tp", "tps")
        link("is_managed_by", "tp", "tm")
        link("helps_to_achieve", "ts", "tg")
        link("implies", "tg", "tps")
        link("is_derived_in", "tg", "treq")
        link("is_supported_by", "tg", "tin")
        link("adopts", "tm", "tlc")
        link("produces", "tm", "tplan")
        link("uses", "tlc", "ts")
        # situazione, entita' e contesto
        link("deals_with_test_target", "tps", "te")
        link("deals_with_test_environment", "tps", "tce")
        link("surrounded_by", "te", "tce")
        link("influences", "tce", "te")
        link("refers_to", "treq", "te")
        link("refers_to", "treq", "tce")
        link("specifies", "trs", "treq")
        link("specifies", "tpss", "tps")
        # processo di testing (A2, A13-A17)
        link("consumes", "p", "trs")
        link("consumes", "p", "tpss")
        link("involves", "p", "role")
        link("requires_as_input", "p", "te")
        link("requires_as_input", "p", "tce")
        for activity in ("dt", "pt", "at"):
            link("part_of", activity, "p")
            link("is_assigned_to", "agent", activity)
        link("plays", "agent", "role")
        link("consumes", "dt", "trs")
        link("consumes", "dt", "tpss")
        link("requires_as_input", "pt", "te")
        link("requires_as_input", "pt", "tce")
        link("involves", "at", "role")
        # design, esecuzione e analisi (A1, A7, A11)
        link("produces", "dt", "rp")
        link("produces", "dt", "tc")
        link("is_based_on", "rp", "tc")
        link("verifies_validates", "tc", "te")
        link("consumes", "pt", "tc")
        link("produces", "pt", "ar")
        link("consumes", "at", "ar")
        link("consumes", "at", "tc")
        link("produces", "at", "tcr")
        link("takes_into_account", "at", "tin")

    # estensioni (dimensione massima, funzione) --------------------------------------
    def grow_tool(self):
        tool = self.add(self.fresh("tool"), "TestingTool", "tool")
        self.link("uses", self.any("agent"), tool)

    def grow_context(self):
        tce = self.add(self.fresh("tce"), "TestContextEntity", "context")
        te = self.any("entity")
        self.link("influences", tce, te)
        if self.rng.random() < 0.5:
            self.link("surrounded_by", te, tce)

    def grow_entity(self):
        te = self.add(self.fresh("te"), pick(self.rng, ["TestItem", "TestableEntity"]), "entity")
        self.link("surrounded_by", te, self.any("context"))
        self.link("verifies_validates", self.any("spec"), te)
        if self.rng.random() < 0.5:
            self.link("deals_with_test_target", self.any("situation"), te)

    def grow_agent(self):
        agent = self.add(self.fresh("agent"), pick(self.rng, ["TestingHumanAgent", "TestingAutomatedAgent"]), "agent")
        self.link("plays", agent, self.any("role"))
        self.link("is_assigned_to", agent, self.any("activity"))
        if self.role("tool") and self.rng.random() < 0.5:
            self.link("uses", agent, self.any("tool"))

    def grow_role(self):
        role = self.add(self.fresh("role"), "TestingRole", "role")
        self.link("involves", "p", role)
        self.link("involves", self.any("activity"), role)
        self.link("plays", self.any("agent"), role)

    def grow_requirement(self):
        treq = self.add(self.fresh("treq"), "TestRequirement", "requirement", label=pick(self.rng, self.settings["NAMES"]))
        self.link("refers_to", treq, self.any("entity"))
        self.link("refers_to", treq, self.any("context"))
        self.link("is_derived_in", self.any("goal"), treq)
        if self.role("basis") and self.rng.random() < 0.5:
            self.link("is_based_on", treq, self.any("basis"))
        trs = self.add(self.fresh("trs"), "TestRequirementSpecification", "requirement_spec")
        self.link("specifies", trs, treq)
        self.link("consumes", "p", trs)
        self.link("consumes", self.any("activity"), trs)

    def grow_goal(self):
        tg = self.add(self.fresh("tg"), "TestGoal", "goal", label=pick(self.rng, self.settings["NAMES"]))
        self.link("operationalizes", "tp", tg)
        for ts in self.role("strategy"):
            self.link("helps_to_achieve", ts, tg)
        self.link("implies", tg, self.any("situation"))
        self.link("is_derived_in", tg, self.any("requirement"))
        tin = self.add(self.fresh("tin"), "TestInformationNeed", "information_need", label=tg.upper())
        self.link("is_supported_by", tg, tin)
        self.link("takes_into_account", self.any("analyze"), tin)

    def grow_strategy(self):
        ts = self.add(self.fresh("ts"), "TestingStrategy", "strategy")
        self.link("associates", "tp", ts)
        for tg in self.role("goal"):
            self.link("helps_to_achieve", ts, tg)
        if self.rng.random() < 0.5:
            self.link("uses", "tlc", ts)

    def grow_situation(self):
        tps = self.add(self.fresh("tps"), "TestParticularSituation", "situation")
        self.link("defines", "tp", tps)
        self.link("implies", self.any("goal"), tps)
        self.link("deals_with_test_target", tps, self.any("entity"))
        tpss = self.add(self.fresh("tpss"), "TestParticularSituationSpecification", "situation_spec")
        self.link("specifies", tpss, tps)
        self.link("consumes", "p", tpss)
        self.link("consumes", self.any("activity"), tpss)

    def _execute(self, perform, tc, expected):
        # un Perform Testing che consuma solo tc: se il valore differisce nasce l'Incident (A11)
        value = expected if self.rng.random() < 0.6 else self.result()
        ar = self.add(self.fresh("ar"), "ActualResult", "result", value=value)
        self.link("consumes", perform, tc)
        self.link("produces", perform, ar)
        if self.rng.random() < 0.5:
            self.link("consumes", self.any("analyze"), ar)
        if value != expected:
            incident = self.add(self.fresh("inc"), "Incident", "incident")
            self.link("produces", perform, incident)
            self.link("relies_on", incident, ar)

    def grow_test_case(self):
        expected = self.result()
        tc = self.add(self.fresh("tc"), "TestCase", "spec", expected_result=expected, input=pick(self.rng, self.settings["NAMES"]))
        self.link("produces", self.any("design"), tc)
        self.link("verifies_validates", tc, self.any("entity"))
        pt = self.add(self.fresh("pt"), pick(self.rng, ["PerformTesting", "PerformDynamicTesting"]), "perform")
        self.by_role["activity"].append(pt)
        self.link("part_of", pt, "p")
        self._execute(pt, tc, expected)

    def grow_requirement_based(self):
        # A3/A4: Design Testing con Test Basis collegata a un requisito (funzionale o no) e metodo assegnato
        functional = self.rng.random() < 0.5
        tb = self.add(self.fresh("tb"), "TestBasis", "basis")
        req = self.add(self.fresh("fr" if functional else "nfr"),
                       "FunctionalRequirement" if functional else "NonFunctionalRequirement", "functional" if functional else "non_functional")
        self.link("is_linked_to", tb, req)
        dt = self.add(self.fresh("dt"), "DesignTesting", "design")
        self.by_role["activity"].append(dt)
        self.link("part_of", dt, "p")
        self.link("consumes", dt, tb)
        self.link("produces", dt, "rp")
        method = self.add(self.fresh("tdm"), pick(self.rng, ["ExperienceBasedMethod", "SpecificationBasedMethod"]), "design_method")
        self.link("is_assigned_to", method, dt)
        expected = self.result()
        tc = self.add(self.fresh("tc"), "TestCase", "spec", expected_result=expected)
        self.link("produces", dt, tc)
        self.link("verifies_validates", tc, self.any("entity"))
        pt = self.add(self.fresh("pt"), "PerformFunctionalDynamicTesting" if functional else "PerformNonFunctionalDynamicTesting", "perform")
        self.by_role["activity"].append(pt)
        self.link("part_of", pt, "p")
        self._execute(pt, tc, expected)
        if self.rng.random() < 0.5:
            self.link("is_based_on", self.any("requirement"), tb)

    def grow_structure_based(self):
        # A12: il Design Testing con metodo structure-based richiede in input un Testable Entity
        dt = self.add(self.fresh("dt"), "DesignTesting", "structural_design")
        self.by_role["activity"].append(dt)
        self.link("part_of", dt, "p")
        self.link("produces", dt, "rp")
        method = self.add(self.fresh("stbm"), "StructureBasedMethod", "design_method")
        self.link("is_assigned_to", method, dt)
        te = self.any("entity")
        self.link("requires_as_input", dt, te)
        tc = self.add(self.fresh("tc"), "TestCase", "spec", expected_result=self.result())
        self.link("produces", dt, tc)
        self.link("verifies_validates", tc, te)

    def grow_suite(self):
        kind = pick(self.rng, ["TestSuite", "TestChecklist"])
        spec = self.add(self.fresh("suite" if kind == "TestSuite" else "chk"), kind, "spec")
        self.link("produces", self.any("design"), spec)
        self.link("verifies_validates", spec, self.any("entity"))

    def grow_static(self):
        pst = self.add(self.fresh("pst"), "PerformStaticTesting", "perform")
        self.by_role["activity"].append(pst)
        self.link("part_of", pst, "p")
        method = self.add(self.fresh("stm"), "StaticTestingMethod", "static_method")
        self.link("is_assigned_to", method, pst)
        tc = pick(self.rng, [s for s in self.role("spec") if self.kb.individual(s).type_name == "TestCase"])
        expected = self.kb.individual(tc).attrs.get("expected_result", self.result())
        ar = self.add(self.fresh("ar"), "ActualResult", "result", value=expected)
        self.link("consumes", pst, tc)
        self.link("produces", pst, ar)

    EXTENSIONS = (
        (1, "grow_tool"), (1, "grow_context"), (1, "grow_entity"), (1, "grow_agent"), (1, "grow_role"),
        (2, "grow_requirement"), (2, "grow_goal"), (1, "grow_strategy"), (2, "grow_situation"),
        (4, "grow_test_case"), (8, "grow_requirement_based"), (3, "grow_structure_based"),
        (1, "grow_suite"), (3, "grow_static"),
    )

    def grow(self, target, upper):
        while len(self.kb) < target:
            room = upper - len(self.kb)
            fitting = [name for size, name in self.EXTENSIONS if size <= room]
            if not fitting:
                break
            getattr(self, pick(self.rng, fitting))()

    # classificazione e riparazione ------------------------------------------------
    def classify(self):
        """Imposta `classification` sui Testable Entity secondo le catene requisito -> basis -> FR/NFR (A5, A6)."""
        kb, schema = self.kb, self.schema
        entities = kb.instances_of(schema, "TestableEntity")
        tags = {te: set() for te in entities}
        for link in kb.sorted_links():
            if link.rel_name != "refers_to" or link.target not in tags:
                continue
            if not schema.is_subtype(kb.individual(link.source).type_name, "TestRequirement"):
                continue
            for based in kb.links_from(link.source, "is_based_on"):
                if not schema.is_subtype(kb.individual(based.target).type_name, "TestBasis"):
                    continue
                for linked in kb.links_from(based.target, "is_linked_to"):
                    target_type = kb.individual(linked.target).type_name
                    if schema.is_subtype(target_type, "FunctionalRequirement"):
                        tags[link.target].add("DevelopableEntity")
                    if schema.is_subtype(target_type, "NonFunctionalRequirement"):
                        tags[link.target].add("EvaluableEntity")
        for te in sorted(tags):
            kb.set_attr(te, CLASSIFICATION_ATTR, ",".join(sorted(tags[te])) or None)

    def repair(self, report):
        fixed = 0
        for d in report.diagnostics:
            w = d.witness or {}
            if d.code == "AX-A8":
                self.link("helps_to_achieve", w["ts"], w["tg"])
            elif d.code == "AX-A11":
                incident = self.add(self.fresh("inc"), "Incident", "incident")
                self.link("produces", w["prt"], incident)
                self.link("relies_on", incident, w["ar"])
            elif d.code in ("AX-A5", "AX-A6"):
                self.classify()
            else:
                continue
            fixed += 1
        return fixed


def generate_conforming(config):
    settings = generator_settings()
    config.check(settings["MAX_SIZE"])
    builder = _Builder(make_rng(config.seed), settings)
    builder.motif()
    if config.size > MOTIF_SIZE:
        upper = int(config.size * (1 + settings["SIZE_TOLERANCE"]))
        builder.grow(config.size, upper)
    builder.classify()

    schema = builder.schema
    for attempt in range(settings["REPAIR_ROUNDS"] + 1):
        candidate = builder.kb.copy().finalize()
        report = validate(candidate, schema, "complete")
        if report.verdict == "pass":
            logger.debug("seed %d: %d individuals after %d repair round(s)", config.seed, len(candidate), attempt)
            return candidate
        if attempt == settings["REPAIR_ROUNDS"] or not builder.repair(report):
            break
    raise GeneratorError(f"seed {config.seed}: generated model still fails validation: {', '.join(report.codes())}")
