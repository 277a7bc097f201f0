# librerie di sistema
import os
import sys
import time
import json

import pandas as pd
from tabulate import tabulate
from tqdm import tqdm

# librerie per realizzare i grafici
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import seaborn as sns

# moduli del validatore
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
from Axioms.axioms import builtin_axioms
from Generator.random_models import random_formula, random_kb
from Logic.evaluator import Evaluator, evaluate_with_witness
from Logic.naive import naive_evaluate, naive_witness
from Schema.schema import builtin_schema

BENCH_DIR = os.path.dirname(__file__)
N_KBS = 1000
N_FORMULAS = 200
TIME_LIMIT = 60.0


# confronto motore / oracolo sui 17 assiomi
def benchmark_axioms(n_kbs=N_KBS):
    schema = builtin_schema()
    axioms = builtin_axioms()
    timings = {a.id: {"engine": 0.0, "naive": 0.0} for a in axioms}
    disagreements = []
    for seed in tqdm(range(n_kbs), desc="Assiomi", file=sys.stderr):
        kb = random_kb(seed)
        evaluator = Evaluator(kb, schema)
        for a in axioms:
            start = time.perf_counter()
            result = evaluate_with_witness(kb, schema, a.formula, evaluator=evaluator)
            middle = time.perf_counter()
            expected = naive_evaluate(kb, schema, a.formula)
            witness = naive_witness(kb, schema, a.formula)
            end = time.perf_counter()
            timings[a.id]["engine"] += middle - start
            timings[a.id]["naive"] += end - middle
            if result.value != expected or result.witness != witness:
                disagreements.append({"kind": "axiom", "seed": seed, "axiom": a.id,
                                      "engine": result.value, "naive": expected})
    return timings, disagreements


# confronto su formule casuali, ognuna su una kb casuale con lo stesso seed
def benchmark_formulas(n_formulas=N_FORMULAS):
    schema = builtin_schema()
    disagreements = []
    for seed in tqdm(range(n_formulas), desc="Formule", file=sys.stderr):
        kb = random_kb(seed)
        formula = random_formula(seed)
        result = evaluate_with_witness(kb, schema, formula)
        if result.value != naive_evaluate(kb, schema, formula) or result.witness != naive_witness(kb, schema, formula):
            disagreements.append({"kind": "formula", "seed": seed, "engine": result.value})
    return disagreements


def save_benchmark(timings, disagreements, elapsed):
    data = {
        "elapsed_seconds": round(elapsed, 3),
        "timings": timings,
        "disagreements": disagreements,
    }
    with open(os.path.join(BENCH_DIR, 'bench_save.json'), 'w') as f:
        json.dump(data, f, indent=4)


# costruzione dei grafici
def plot_timings(timings):
    graphics_dir = os.path.join(BENCH_DIR, "graphics")
    os.makedirs(graphics_dir, exist_ok=True)

    df = pd.DataFrame([
        {"Assioma": id, "Valutatore": name, "Secondi": seconds}
        for id, row in timings.items()
        for name, seconds in row.items()
    ])

    plt.figure(figsize=(12, 5))
    sns.barplot(x="Assioma", y="Secondi", hue="Valutatore", data=df)
    plt.title("Tempo totale di valutazione per assioma")
    plt.grid(axis='y')
    plt.tight_layout()
    plt.savefig(os.path.join(graphics_dir, 'tempi_per_assioma.png'))
    plt.close()

    totals = df.groupby("Valutatore")["Secondi"].sum().reset_index()
    plt.figure(figsize=(6, 4))
    sns.barplot(x="Valutatore", y="Secondi", data=totals)
    plt.title("Tempo totale: motore vs oracolo")
    plt.grid(axis='y')
    plt.tight_layout()
    plt.savefig(os.path.join(graphics_dir, 'tempi_totali.png'))
    plt.close()


def main():
    start = time.perf_counter()
    timings, disagreements = benchmark_axioms()
    disagreements += benchmark_formulas()
    elapsed = time.perf_counter() - start

    save_benchmark(timings, disagreements, elapsed)
    plot_timings(timings)

    rows = [(id, f"{t['engine']:.3f}", f"{t['naive']:.3f}") for id, t in timings.items()]
    print(tabulate(rows, headers=["Assioma", "Motore (s)", "Oracolo (s)"]))
    print(f"\nDisaccordi: {len(disagreements)}")
    print(f"Tempo totale: {elapsed:.1f} s (limite {TIME_LIMIT:.0f} s)")

    if disagreements or elapsed > TIME_LIMIT:
        sys.exit(1)


if __name__ == "__main__":
    main()
