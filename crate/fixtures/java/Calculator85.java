/**
 * Calculator85 program.
 */
public class Calculator85
{
    static final int LIMIT = 100;

    public static int sumDigits(int num)
    {
        int total = 0;
        while (num > 0)
        {
            total += num % 10;
            num /= 10;
        }
        return total;
    }

    public static void drawStars(int height)
    {
        for (int row = 1; row <= height; row++)
        {
            for (int col = 0; col < row; col++)
            {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    static int vowels(String line)
    {
        int found = 0;
        for (int k = 0; k < line.length(); k++)
        {
            char ch = Character.toLowerCase(line.charAt(k));
            switch (ch)
            {
                case 'a':
                case 'e':
                case 'i':
                case 'o':
                case 'u':
                found++;
                break;
                default:
                break;
            }
        }
        return found;
    }

    public static void main(String[] args)
    {
        for (int i = 0; i < LIMIT; i += 10)
        {
            System.out.println("Step " + i);
        }
        System.out.println("Digits: " + sumDigits(91056));
        drawStars(3);
        System.out.println(vowels("hello world"));
    }
}
