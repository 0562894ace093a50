from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='Sentence',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('theory', models.CharField(choices=[
                    ('dlo-q', 'Dlo Q'), ('dlo-r', 'Dlo R'), ('order-z', 'Order Z'),
                    ('order-n', 'Order N'), ('oag-q', 'Oag Q'), ('oag-r', 'Oag R'),
                    ('presburger-z', 'Presburger Z'), ('presburger-n', 'Presburger N'),
                    ('mul-r', 'Mul R'), ('mul-q', 'Mul Q'), ('mul-q-pos', 'Mul Q Pos'),
                ], max_length=16)),
                ('text', models.TextField()),
                ('truth', models.BooleanField()),
                ('note', models.TextField(blank=True, default='')),
            ],
            options={
                'ordering': ['pk'],
            },
        ),
    ]
