"""Regenerate the packaged data assets deterministically.

Writes src/stegotext/data/corpus_zh.txt and src/stegotext/data/cover_512.png.
The corpus is synthetic Chinese-like text sampled from a fixed word lexicon:
licensing-clean, stable across runs, and restricted to characters that
encode as exactly three UTF-8 bytes so capacity arithmetic in docs and
tests stays simple.
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from stegotext.images import save_image, synthetic_cover  # noqa: E402

SEED = 20240601
SENTENCES = 3600

# weight classes: connectives glue sentences together, verbs and nouns carry
# the content; the repetition this sampling produces is what gives the
# character n-gram model its signal
CONNECTIVES = [
    "的", "了", "在", "是", "和", "有", "不", "这", "那", "也", "都", "很",
    "会", "能", "要", "就", "与", "对", "从", "到", "为", "以", "及", "或",
    "等", "被", "把", "让", "使", "于", "而", "之", "中", "者", "其", "则",
    "我们", "他们", "它们", "人们", "可以", "需要", "通过", "根据", "对于",
    "因为", "所以", "如果", "但是", "而且", "就是", "没有", "也是", "还是",
    "都是", "以及", "或者", "并且", "由于", "因此", "然而", "同时", "此外",
    "例如", "其中", "关于", "作为", "之间", "之后", "之前", "以上", "以下",
]
VERBS = [
    "使用", "提供", "进行", "实现", "包括", "成为", "得到", "获得", "提高",
    "增加", "减少", "改变", "影响", "产生", "形成", "建立", "发现", "表示",
    "说明", "显示", "证明", "要求", "希望", "认为", "觉得", "知道", "了解",
    "记录", "保存", "删除", "复制", "传输", "发送", "接收", "处理", "分析",
    "计算", "测量", "观察", "比较", "选择", "决定", "开始", "结束", "继续",
    "停止", "完成", "准备", "计划", "安排", "组织", "参加", "支持", "帮助",
    "保护", "恢复", "检查", "验证", "确认", "描述", "定义", "设计", "构建",
    "训练", "学习", "研究", "探索", "解决", "避免", "防止", "检测", "修复",
]
NOUNS = [
    "数据", "图像", "信息", "技术", "方法", "结果", "系统", "模型", "安全",
    "网络", "程序", "实验", "理论", "时间", "空间", "世界", "国家", "发展",
    "经济", "文化", "教育", "科学", "自然", "环境", "能源", "材料", "结构",
    "功能", "应用", "工程", "产品", "质量", "管理", "服务", "市场", "企业",
    "社会", "历史", "地理", "物理", "化学", "生物", "数学", "语言", "文字",
    "艺术", "音乐", "故事", "朋友", "家庭", "学校", "老师", "学生", "工作",
    "生活", "健康", "希望", "未来", "过去", "现在", "今天", "明天", "城市",
    "乡村", "建筑", "交通", "医院", "医生", "道路", "桥梁", "河流", "山脉",
    "海洋", "天空", "月亮", "太阳", "地球", "宇宙", "动物", "植物", "森林",
    "草原", "气候", "温度", "问题", "答案", "原因", "条件", "标准", "规则",
    "过程", "阶段", "目标", "任务", "项目", "内容", "形式", "特点", "性质",
    "关系", "作用", "意义", "价值", "水平", "能力", "知识", "经验", "思想",
    "观点", "态度", "行为", "活动", "方式", "手段", "工具", "设备", "装置",
    "部分", "整体", "细节", "背景", "基础", "核心", "关键", "重点", "方向",
    "字符", "编码", "噪声", "信号", "通道", "载体", "密钥", "算法", "概率",
    "统计", "样本", "误差", "精度", "维度", "矩阵", "向量", "函数", "变量",
]
MODIFIERS = [
    "重要", "主要", "基本", "核心", "特别", "普通", "特殊", "常见", "简单",
    "复杂", "容易", "困难", "快速", "缓慢", "高效", "准确", "清晰", "明确",
    "具体", "抽象", "真实", "正确", "错误", "合理", "有效", "积极", "稳定",
    "完整", "独立", "相同", "不同", "相似", "相关", "直接", "间接", "显著",
]

LEXICON = (
    [(w, 6) for w in CONNECTIVES]
    + [(w, 3) for w in VERBS]
    + [(w, 2) for w in NOUNS]
    + [(w, 2) for w in MODIFIERS]
)


def build_corpus() -> str:
    rng = random.Random(SEED)
    words = [w for w, weight in LEXICON for _ in range(weight)]
    lines = []
    for _ in range(SENTENCES):
        count = rng.randint(6, 14)
        parts = []
        comma_at = rng.randint(3, 7)
        for i in range(count):
            parts.append(rng.choice(words))
            if i == comma_at and i < count - 1:
                parts.append("，")
        parts.append("。")
        lines.append("".join(parts))
    return "\n".join(lines) + "\n"


def main() -> None:
    data_dir = Path(__file__).resolve().parents[1] / "src" / "stegotext" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)

    corpus = build_corpus()
    stream = "".join(corpus.split())
    widths = {len(ch.encode("utf-8")) for ch in stream}
    assert widths == {3}, f"corpus must be pure 3-byte characters, found widths {widths}"
    assert len(stream) >= 60_000, f"corpus too small: {len(stream)} chars"
    (data_dir / "corpus_zh.txt").write_text(corpus, encoding="utf-8")
    print(f"corpus_zh.txt: {len(stream)} characters, {len(set(stream))} distinct")

    cover = synthetic_cover(512, 512, seed=7)
    save_image(cover, str(data_dir / "cover_512.png"))
    print(f"cover_512.png: {cover.shape}, lsb ones ratio "
          f"{float((cover & 1).mean()):.4f}")


if __name__ == "__main__":
    main()
