#!/usr/bin/env python3
"""Regenerates the bundled corpora under data/.

Deterministic by construction: document content is assigned by fixed
schedules, not sampled. Run from the repository root:

    python3 scripts/gen_demo_data.py
"""

import json
import os

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def m(spec):
    """'surface/pos' or 'surface/pos/base' -> morpheme dict."""
    parts = spec.split("/")
    surface, pos = parts[0], parts[1]
    base = parts[2] if len(parts) > 2 else surface
    return {"surface": surface, "pos": pos, "base": base}


def chunk(head, *morphemes):
    return {"head": head, "morphemes": [m(s) for s in morphemes]}


def sent(*chunks):
    return {"chunks": list(chunks)}


# ---------------------------------------------------------------------------
# sentence templates

def s_sig_filler(noun):
    # 当社の<noun>は好調に推移した。
    return sent(
        chunk(1, "当社/noun", "の/particle"),
        chunk(3, f"{noun}/noun", "は/particle"),
        chunk(3, "好調/noun", "に/particle"),
        chunk(-1, "推移/noun", "し/verb/する", "た/auxiliary", "。/symbol"),
    )


def s_generic_filler():
    # 業績は堅調に推移した。
    return sent(
        chunk(2, "業績/noun", "は/particle"),
        chunk(2, "堅調/noun", "に/particle"),
        chunk(-1, "推移/noun", "し/verb/する", "た/auxiliary", "。/symbol"),
    )


def s_product_filler():
    # 新製品の販売を強化した。
    return sent(
        chunk(1, "新製品/noun", "の/particle"),
        chunk(2, "販売/noun", "を/particle"),
        chunk(-1, "強化/noun", "し/verb/する", "た/auxiliary", "。/symbol"),
    )


def s_mousho_filler():
    # 猛暑対策の商品を拡充した。 (keyword mention without a clue)
    return sent(
        chunk(1, "猛暑/noun", "対策/noun", "の/particle"),
        chunk(2, "商品/noun", "を/particle"),
        chunk(-1, "拡充/noun", "し/verb/する", "た/auxiliary", "。/symbol"),
    )


def s_endaka():
    # 円高のため、輸出が減少した。
    return sent(
        chunk(2, "円高/noun", "の/particle", "ため/noun", "、/symbol"),
        chunk(2, "輸出/noun", "が/particle"),
        chunk(-1, "減少/noun", "し/verb/する", "た/auxiliary", "。/symbol"),
    )


def s_ukete():
    # 原材料価格の上昇を受けて、製品価格を改定した。
    return sent(
        chunk(1, "原材料価格/noun", "の/particle"),
        chunk(3, "上昇/noun", "を/particle", "受け/verb/受ける", "て/particle",
              "、/symbol"),
        chunk(3, "製品価格/noun", "を/particle"),
        chunk(-1, "改定/noun", "し/verb/する", "た/auxiliary", "。/symbol"),
    )


def s_tameda():
    # 売上が好調なのは新製品が寄与したためだ。
    return sent(
        chunk(1, "売上/noun", "が/particle"),
        chunk(4, "好調/noun", "な/auxiliary/だ", "の/noun", "は/particle"),
        chunk(3, "新製品/noun", "が/particle"),
        chunk(4, "寄与/noun", "し/verb/する", "た/auxiliary"),
        chunk(-1, "ため/noun", "だ/auxiliary", "。/symbol"),
    )


def s_ensafe():
    # 円安が進行した。
    return sent(
        chunk(1, "円安/noun", "が/particle"),
        chunk(-1, "進行/noun", "し/verb/する", "た/auxiliary", "。/symbol"),
    )


def s_konotame():
    # このため、輸入コストが増加した。
    return sent(
        chunk(2, "この/other", "ため/noun", "、/symbol"),
        chunk(2, "輸入コスト/noun", "が/particle"),
        chunk(-1, "増加/noun", "し/verb/する", "た/auxiliary", "。/symbol"),
    )


def s_obj_kensa():
    # 品質向上のために、検査体制を強化した。
    return sent(
        chunk(1, "品質向上/noun", "の/particle"),
        chunk(3, "ため/noun", "に/particle", "、/symbol"),
        chunk(3, "検査体制/noun", "を/particle"),
        chunk(-1, "強化/noun", "し/verb/する", "た/auxiliary", "。/symbol"),
    )


def s_obj_service():
    # 顧客満足のために、サービスを改善した。
    return sent(
        chunk(1, "顧客満足/noun", "の/particle"),
        chunk(3, "ため/noun", "に/particle", "、/symbol"),
        chunk(3, "サービス/noun", "を/particle"),
        chunk(-1, "改善/noun", "し/verb/する", "た/auxiliary", "。/symbol"),
    )


def s_obj_growth():
    # 成長のための投資を行った。
    return sent(
        chunk(1, "成長/noun", "の/particle"),
        chunk(2, "ため/noun", "の/particle"),
        chunk(3, "投資/noun", "を/particle"),
        chunk(-1, "行っ/verb/行う", "た/auxiliary", "。/symbol"),
    )


# the planted hot-summer records, one per company ------------------------

def s_mousho_rare():
    # 猛暑で除草剤が売れたため、散水用品の販売が好調だった。 (CP001)
    return sent(
        chunk(2, "猛暑/noun", "で/particle"),
        chunk(2, "除草剤/noun", "が/particle"),
        chunk(5, "売れ/verb/売れる", "た/auxiliary", "ため/noun", "、/symbol"),
        chunk(4, "散水用品/noun", "の/particle"),
        chunk(5, "販売/noun", "が/particle"),
        chunk(-1, "好調/noun", "だっ/auxiliary/だ", "た/auxiliary", "。/symbol"),
    )


def s_mousho_beer():
    # 猛暑のため、ビアガーデンの来客が増えた。 (CP002)
    return sent(
        chunk(3, "猛暑/noun", "の/particle", "ため/noun", "、/symbol"),
        chunk(2, "ビアガーデン/noun", "の/particle"),
        chunk(3, "来客/noun", "が/particle"),
        chunk(-1, "増え/verb/増える", "た/auxiliary", "。/symbol"),
    )


def s_mousho_common():
    # 猛暑のため、冷房需要が増加した。 (CP003..CP007)
    return sent(
        chunk(2, "猛暑/noun", "の/particle", "ため/noun", "、/symbol"),
        chunk(2, "冷房/noun", "需要/noun", "が/particle"),
        chunk(-1, "増加/noun", "し/verb/する", "た/auxiliary", "。/symbol"),
    )


def s_mousho_drink():
    # 猛暑のため、飲料の需要が増加した。 (CP008)
    return sent(
        chunk(3, "猛暑/noun", "の/particle", "ため/noun", "、/symbol"),
        chunk(2, "飲料/noun", "の/particle"),
        chunk(3, "需要/noun", "が/particle"),
        chunk(-1, "増加/noun", "し/verb/する", "た/auxiliary", "。/symbol"),
    )


COMPANIES = ["CP001", "CP002", "CP003", "CP004", "CP005", "CP006", "CP007",
             "CP008"]

SIGNATURES = {
    "CP001": ("除草剤", "散水用品"),
    "CP002": ("醸造設備", "直営店"),
    "CP003": ("半導体装置", "制御機器"),
    "CP004": ("航空券", "国際貨物"),
    "CP005": ("液糖", "製菓材料"),
    "CP006": ("空調設備", "断熱材"),
    "CP007": ("園芸資材", "植木"),
    "CP008": ("飲料充填", "自動販売機"),
}

MOUSHO_SENTENCES = {
    "CP001": s_mousho_rare,
    "CP002": s_mousho_beer,
    "CP003": s_mousho_common,
    "CP004": s_mousho_common,
    "CP005": s_mousho_common,
    "CP006": s_mousho_common,
    "CP007": s_mousho_common,
    "CP008": s_mousho_drink,
}

# occurrence schedule for signature nouns: doc offset -> mentions
SIG1_COUNTS = [3, 2, 2, 1, 1]  # docs 1..5
SIG2_COUNTS = [2, 3, 1, 2, 1]  # docs 6..10


def build_demo():
    docs = []
    labels = []

    def add_label(doc_id, sentence, clue_chunk, clue_surface, label):
        labels.append({"doc_id": doc_id, "sentence": sentence,
                       "clue_chunk": clue_chunk, "clue_surface": clue_surface,
                       "label": label})

    for company in COMPANIES:
        sig1, sig2 = SIGNATURES[company]
        for di in range(25):
            doc_id = f"{company}-{di + 1:02d}"
            sentences = []
            if di < 5:
                sentences += [s_sig_filler(sig1)] * SIG1_COUNTS[di]
                sentences.append(s_generic_filler())
            elif di < 10:
                sentences += [s_sig_filler(sig2)] * SIG2_COUNTS[di - 5]
                sentences.append(s_product_filler())
            elif di == 10:
                sentences.append(s_obj_kensa())
                add_label(doc_id, 0, 1, "ため", 0)
                sentences.append(s_generic_filler())
            elif di == 11:
                sentences.append(s_obj_service())
                add_label(doc_id, 0, 1, "ため", 0)
                sentences.append(s_obj_growth())
                add_label(doc_id, 1, 1, "ため", 0)
            elif di == 12:
                sentences.append(s_endaka())
                add_label(doc_id, 0, 0, "ため", 1)
                sentences.append(s_generic_filler())
            elif di == 13:
                sentences.append(s_ukete())
                add_label(doc_id, 0, 1, "を受けて", 1)
                sentences.append(s_product_filler())
            elif di == 14:
                sentences.append(s_tameda())
                add_label(doc_id, 0, 4, "ためだ。", 1)
                sentences.append(s_generic_filler())
            elif di == 15:
                sentences.append(s_ensafe())
                sentences.append(s_konotame())
                add_label(doc_id, 1, 0, "このため", 1)
            elif di == 16:
                sentences.append(MOUSHO_SENTENCES[company]())
                clue_chunk = 2 if company == "CP001" else 0
                add_label(doc_id, 0, clue_chunk, "ため", 1)
                sentences.append(s_generic_filler())
            elif di == 19 and company in ("CP006", "CP007"):
                # two extra mentions push df(猛暑) past the company count
                sentences.append(s_mousho_filler())
                sentences.append(s_generic_filler())
            else:
                sentences.append(s_generic_filler())
                sentences.append(s_product_filler())
            docs.append({"doc_id": doc_id, "company_id": company,
                         "sentences": sentences})
    return docs, labels


def build_fixtures():
    docs = []

    # 半導体メーカーの設備投資の拡大を背景に半導体製造装置向け制御システムの販売が伸びた。
    docs.append({
        "doc_id": "FIX-A", "company_id": "CPX",
        "sentences": [sent(
            chunk(1, "半導体/noun", "メーカー/noun", "の/particle"),
            chunk(2, "設備投資/noun", "の/particle"),
            chunk(6, "拡大/noun", "を/particle", "背景/noun", "に/particle"),
            chunk(4, "半導体製造装置/noun", "向け/noun"),
            chunk(5, "制御/noun", "システム/noun", "の/particle"),
            chunk(6, "販売/noun", "が/particle"),
            chunk(-1, "伸び/verb/伸びる", "た/auxiliary", "。/symbol"),
        )],
    })

    # 国際線が好調なのは欧米路線を中心にビジネス客が増えたためだ。
    docs.append({
        "doc_id": "FIX-C", "company_id": "CPY",
        "sentences": [sent(
            chunk(1, "国際線/noun", "が/particle"),
            chunk(6, "好調/adjective", "な/auxiliary/だ", "の/noun",
                  "は/particle"),
            chunk(3, "欧米路線/noun", "を/particle"),
            chunk(5, "中心/noun", "に/particle"),
            chunk(5, "ビジネス/noun", "客/noun", "が/particle"),
            chunk(6, "増え/verb/増える", "た/auxiliary"),
            chunk(-1, "ため/noun", "だ/auxiliary", "。/symbol"),
        )],
    })

    # 円高のため、日本経済は悪化した。
    docs.append({
        "doc_id": "FIX-E", "company_id": "CPZ",
        "sentences": [sent(
            chunk(2, "円高/noun", "の/particle", "ため/noun", "、/symbol"),
            chunk(2, "日本経済/noun", "は/particle"),
            chunk(-1, "悪化/noun", "し/verb/する", "た/auxiliary", "。/symbol"),
        )],
    })

    # あなたのために、花を買った。
    docs.append({
        "doc_id": "FIX-O", "company_id": "CPZ",
        "sentences": [sent(
            chunk(1, "あなた/noun", "の/particle"),
            chunk(3, "ため/noun", "に/particle", "、/symbol"),
            chunk(3, "花/noun", "を/particle"),
            chunk(-1, "買っ/verb/買う", "た/auxiliary", "。/symbol"),
        )],
    })

    # 猛暑が続いた。このため、ビールの販売が増えた。
    docs.append({
        "doc_id": "FIX-X", "company_id": "CPY",
        "sentences": [
            sent(
                chunk(1, "猛暑/noun", "が/particle"),
                chunk(-1, "続い/verb/続く", "た/auxiliary", "。/symbol"),
            ),
            sent(
                chunk(3, "この/other", "ため/noun", "、/symbol"),
                chunk(2, "ビール/noun", "の/particle"),
                chunk(3, "販売/noun", "が/particle"),
                chunk(-1, "増え/verb/増える", "た/auxiliary", "。/symbol"),
            ),
        ],
    })

    # このため、価格が上がった。 (no previous sentence)
    docs.append({
        "doc_id": "FIX-X0", "company_id": "CPY",
        "sentences": [sent(
            chunk(2, "この/other", "ため/noun", "、/symbol"),
            chunk(2, "価格/noun", "が/particle"),
            chunk(-1, "上がっ/verb/上がる", "た/auxiliary", "。/symbol"),
        )],
    })

    # 販売が落ち込んだ。なぜなら冷夏が続いたからだ。
    docs.append({
        "doc_id": "FIX-D", "company_id": "CPZ",
        "sentences": [
            sent(
                chunk(1, "販売/noun", "が/particle"),
                chunk(-1, "落ち込ん/verb/落ち込む", "だ/auxiliary",
                      "。/symbol"),
            ),
            sent(
                chunk(2, "なぜなら/other"),
                chunk(2, "冷夏/noun", "が/particle"),
                chunk(-1, "続い/verb/続く", "た/auxiliary", "から/particle",
                      "だ/auxiliary", "。/symbol"),
            ),
        ],
    })

    return docs


def write_jsonl(path, rows):
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")


def main():
    demo_dir = os.path.join(ROOT, "data", "demo")
    fixture_dir = os.path.join(ROOT, "data", "fixtures")
    os.makedirs(demo_dir, exist_ok=True)
    os.makedirs(fixture_dir, exist_ok=True)

    docs, labels = build_demo()
    write_jsonl(os.path.join(demo_dir, "corpus.jsonl"), docs)
    write_jsonl(os.path.join(demo_dir, "labels.jsonl"), labels)
    write_jsonl(os.path.join(fixture_dir, "corpus.jsonl"), build_fixtures())
    print(f"demo: {len(docs)} documents, {len(labels)} labels")


if __name__ == "__main__":
    main()
