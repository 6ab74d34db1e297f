"""Regenerates the golden files under tests/golden/ with RDKit.

RDKit is only the test oracle; nothing in the library links against it.
Usage: python3 tests/oracle/make_golden.py  (from the repository root)
"""
import os
import sys

from rdkit import Chem, RDConfig
from rdkit.Chem import QED

sys.path.append(os.path.join(RDConfig.RDContribDir, "SA_Score"))
import sascorer  # noqa: E402

ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
GOLDEN = os.path.join(ROOT, "tests", "golden")

NAMED_DRUGS = [
    ("ibuprofen", "CC(C)Cc1ccc(cc1)C(C)C(=O)O"),
    ("naproxen", "COc1ccc2cc(ccc2c1)C(C)C(=O)O"),
    ("gefitinib", "COc1cc2ncnc(Nc3ccc(F)c(Cl)c3)c2cc1OCCCN1CCOCC1"),
    ("erlotinib", "COCCOc1cc2ncnc(Nc3cccc(c3)C#C)c2cc1OCCOC"),
    ("pazopanib", "Cc1ccc(Nc2nccc(n2)N(C)c2ccc3c(C)n(C)nc3c2)cc1S(N)(=O)=O"),
    ("sunitinib", "CCN(CC)CCNC(=O)c1c(C)[nH]c(C=C2C(=O)Nc3ccc(F)cc23)c1C"),
    ("alpelisib", "Cc1nc(NC(=O)N2CCCC2C(N)=O)sc1-c1ccnc(C(C)(C)C(F)(F)F)c1"),
    ("inavolisib", "CC(Nc1ccc2c(c1)OCCn1cc(N3C(COC3=O)C(F)F)nc1-2)C(N)=O"),
    ("aspirin", "CC(=O)Oc1ccccc1C(=O)O"),
    ("paracetamol", "CC(=O)Nc1ccc(O)cc1"),
    ("caffeine", "Cn1cnc2c1c(=O)n(C)c(=O)n2C"),
    ("diazepam", "CN1C(=O)CN=C(c2ccccc2)c2cc(Cl)ccc21"),
    ("imatinib", "Cc1ccc(NC(=O)c2ccc(CN3CCN(C)CC3)cc2)cc1Nc1nccc(-c2cccnc2)n1"),
    ("celecoxib", "Cc1ccc(-c2cc(C(F)(F)F)nn2-c2ccc(S(N)(=O)=O)cc2)cc1"),
    ("sildenafil", "CCCc1nn(C)c2c(=O)[nH]c(-c3cc(S(=O)(=O)N4CCN(C)CC4)ccc3OCC)nc12"),
    ("lidocaine", "CCN(CC)CC(=O)Nc1c(C)cccc1C"),
    ("fluoxetine", "CNCCC(Oc1ccc(C(F)(F)F)cc1)c1ccccc1"),
    ("propranolol", "CC(C)NCC(O)COc1cccc2ccccc12"),
    ("warfarin", "CC(=O)CC(c1ccccc1)c1c(O)c2ccccc2oc1=O"),
    ("omeprazole", "COc1ccc2[nH]c(S(=O)Cc3ncc(C)c(OC)c3C)nc2c1"),
]


def qed_golden():
    path = os.path.join(GOLDEN, "named_drugs_qed.tsv")
    with open(path, "w") as out:
        out.write("# name\tsmiles\tqed\tmw\tlogp\thba\thbd\ttpsa\trotb\tarom\talerts\n")
        for name, smi in NAMED_DRUGS:
            mol = Chem.MolFromSmiles(smi)
            assert mol is not None, name
            p = QED.properties(mol)
            out.write(
                f"{name}\t{smi}\t{QED.qed(mol):.6f}\t{p.MW:.4f}\t{p.ALOGP:.4f}\t{p.HBA}\t{p.HBD}"
                f"\t{p.PSA:.4f}\t{p.ROTB}\t{p.AROM}\t{p.ALERTS}\n")


def sas_golden(n=100):
    src = os.path.join(ROOT, "data", "corpus_1k.smi")
    path = os.path.join(GOLDEN, "corpus_sas.tsv")
    rows = []
    with open(src) as f:
        for line in f:
            if line.startswith("#") or not line.strip():
                continue
            smi = line.split("\t")[0].strip()
            rows.append(smi)
            if len(rows) == n:
                break
    with open(path, "w") as out:
        out.write("# smiles\tsas (RDKit Contrib sascorer)\n")
        for smi in rows:
            out.write(f"{smi}\t{sascorer.calculateScore(Chem.MolFromSmiles(smi)):.6f}\n")


if __name__ == "__main__":
    os.makedirs(GOLDEN, exist_ok=True)
    qed_golden()
    sas_golden()
